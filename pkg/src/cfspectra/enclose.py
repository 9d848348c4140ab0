"""Transcendental enclosures (logs) bridged through mpmath interval arithmetic.

Only diagnostics flow through here; all theorem checks stay in exact integer
or rational arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

from mpmath import iv

from .intervals import FInterval


def _raw_to_fraction(raw) -> Fraction:
    sign, man, exp, _ = raw
    if man == 0:
        return Fraction(0)
    val = Fraction(man) * (Fraction(2) ** exp)
    return -val if sign else val


def _to_iv(x, prec: int):
    if isinstance(x, FInterval):
        lo, hi = x.lo, x.hi
    else:
        lo = hi = Fraction(x)
    a = iv.mpf(lo.numerator) / iv.mpf(lo.denominator)
    b = iv.mpf(hi.numerator) / iv.mpf(hi.denominator)
    return iv.mpf([a.a, b.b])


def _from_iv(v) -> FInterval:
    a, b = v._mpi_
    return FInterval(_raw_to_fraction(a), _raw_to_fraction(b))


def log_enclosure(x, prec: int = 96) -> FInterval:
    """Enclosure of log(x) for x > 0 (FInterval or rational)."""
    old = iv.prec
    iv.prec = prec
    try:
        v = _to_iv(x, prec)
        if v.a <= 0:
            raise ValueError("log requires a positive argument")
        return _from_iv(iv.log(v))
    finally:
        iv.prec = old


def log_ratio_enclosure(num, den, prec: int = 96) -> FInterval:
    """Enclosure of log(num)/log(den); both arguments positive."""
    old = iv.prec
    iv.prec = prec
    try:
        n = _to_iv(num, prec)
        d = _to_iv(den, prec)
        if n.a <= 0 or d.a <= 0:
            raise ValueError("arguments must be positive")
        return _from_iv(iv.log(n) / iv.log(d))
    finally:
        iv.prec = old
