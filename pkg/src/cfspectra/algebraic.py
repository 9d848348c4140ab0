"""Real algebraic numbers as squarefree integer polynomials plus certified
dyadic isolating intervals.

All decisions (signs, floors, comparisons) reduce to exact integer sign tests
on the minimal polynomial at dyadic points; nothing here depends on floating
point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .intervals import FInterval
from .matrices import Mat2
from .polynomials import (
    IntPolynomial,
    count_roots_in,
    poly_gcd,
    sign_variations,
    squarefree_part,
    transform_to_unit,
)

REFINE_HARD_CAP = 1 << 17  # bits; past this we give up rather than loop


def _is_dyadic(q: Fraction) -> bool:
    d = q.denominator
    return d & (d - 1) == 0


@dataclass
class DyadicInterval:
    """[lo, hi] with dyadic rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        self.lo = Fraction(self.lo)
        self.hi = Fraction(self.hi)
        if self.lo > self.hi:
            raise ValueError("interval endpoints out of order")
        if not (_is_dyadic(self.lo) and _is_dyadic(self.hi)):
            raise ValueError("endpoints must be dyadic rationals")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def as_finterval(self) -> FInterval:
        return FInterval(self.lo, self.hi)


class AlgebraicNumber:
    """The unique real root of `minpoly` inside `isolating`."""

    def __init__(self, minpoly: IntPolynomial, isolating: DyadicInterval):
        self.minpoly = minpoly
        self.isolating = isolating
        self._sign_lo: int | None = None

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    def __repr__(self):
        return (
            f"AlgebraicNumber({list(self.minpoly.coeffs)}, "
            f"[{self.isolating.lo}, {self.isolating.hi}])"
        )

    @staticmethod
    def from_rational(q) -> "AlgebraicNumber":
        q = Fraction(q)
        p = IntPolynomial.from_coeffs([-q.numerator, q.denominator])
        if _is_dyadic(q):
            return AlgebraicNumber(p, DyadicInterval(q, q))
        scale = 1 << 32
        lo = Fraction(floor(q * scale), scale)
        return AlgebraicNumber(p, DyadicInterval(lo, lo + Fraction(1, scale)))

    def is_degenerate(self) -> bool:
        return self.isolating.lo == self.isolating.hi

    def rational_value(self) -> Fraction | None:
        """The exact value when this number is certifiably rational."""
        if self.is_degenerate():
            return self.isolating.lo
        if self.degree == 1:
            c0, c1 = self.minpoly.coeffs
            return Fraction(-c0, c1)
        return None

    def _endpoint_sign(self) -> int:
        if self._sign_lo is None:
            self._sign_lo = self.minpoly.sign_at(self.isolating.lo)
        return self._sign_lo

    def refine_to(self, bits: int) -> DyadicInterval:
        """Bisect the isolating interval down to width <= 2^-bits."""
        if bits < 1:
            raise ValueError("bits must be >= 1")
        rat = self.rational_value()
        if rat is not None:
            if _is_dyadic(rat):
                self.isolating = DyadicInterval(rat, rat)
                return self.isolating
        if self.isolating.width <= Fraction(1, 1 << bits):
            return self.isolating
        sign_lo = self._endpoint_sign()
        lo, hi = self.isolating.lo, self.isolating.hi
        e = max(lo.denominator.bit_length(), hi.denominator.bit_length()) - 1
        ulo = lo.numerator << (e - (lo.denominator.bit_length() - 1))
        uhi = hi.numerator << (e - (hi.denominator.bit_length() - 1))
        coeffs = self.minpoly.coeffs
        d = len(coeffs) - 1
        while Fraction(uhi - ulo, 1 << e) > Fraction(1, 1 << bits):
            m = ulo + uhi  # midpoint mantissa at exponent e+1
            e += 1
            ulo <<= 1
            uhi <<= 1
            acc = 0
            pw = 1
            for i in range(d, -1, -1):
                acc = acc * m + coeffs[i] * pw
                if i > 0:
                    pw <<= e
            if acc == 0:
                ulo = uhi = m  # the root is exactly dyadic
                break
            if ((acc > 0) - (acc < 0)) == sign_lo:
                ulo = m
            else:
                uhi = m
        self.isolating = DyadicInterval(Fraction(ulo, 1 << e), Fraction(uhi, 1 << e))
        self._sign_lo = sign_lo if ulo != uhi else None
        return self.isolating

    def value_interval(self, bits: int) -> FInterval:
        self.refine_to(bits)
        return self.isolating.as_finterval()

    def __eq__(self, other):
        if not isinstance(other, AlgebraicNumber):
            return NotImplemented
        return alg_equal(self, other)

    __hash__ = None


def refine_to(x: AlgebraicNumber, bits: int) -> DyadicInterval:
    return x.refine_to(bits)


def isolate_real_roots(p) -> list[AlgebraicNumber]:
    """All real roots of p, ascending, with disjoint dyadic isolating intervals.

    Descartes counts on the squarefree part drive the bisection; a count of
    0 or 1 is exact, so every returned interval is certified.
    """
    if not isinstance(p, IntPolynomial):
        p = IntPolynomial.from_coeffs(p)
    if p.is_zero():
        raise ValueError("degenerate input: zero polynomial")
    p = squarefree_part(p)
    if p.degree == 0:
        return []
    if p.degree == 1:
        c0, c1 = p.coeffs
        return [AlgebraicNumber.from_rational(Fraction(-c0, c1))]
    bound = 2 + max(abs(c) for c in p.coeffs[:-1]) // abs(p.leading)
    big = Fraction(1 << bound.bit_length())
    intervals: list[tuple[Fraction, Fraction]] = []
    stack = [(-big, big)]
    while stack:
        lo, hi = stack.pop()
        v = sign_variations(transform_to_unit(p, lo, hi).reverse().shift_taylor(1).coeffs)
        if v == 0:
            continue
        if v == 1:
            intervals.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if p.sign_at(mid) == 0:
            # split just past the exact root so endpoints stay off roots
            delta = (hi - lo) / 4
            while p.sign_at(mid + delta) == 0:
                delta /= 2
            mid = mid + delta
        stack.append((lo, mid))
        stack.append((mid, hi))
    intervals.sort()
    return [AlgebraicNumber(p, DyadicInterval(lo, hi)) for lo, hi in intervals]


def floor_of(x: AlgebraicNumber) -> int:
    """Certified floor; exact sign tests settle integer boundary points."""
    rat = x.rational_value()
    if rat is not None:
        return floor(rat)
    while True:
        lo, hi = x.isolating.lo, x.isolating.hi
        flo, fhi = floor(lo), floor(hi)
        if flo == fhi:
            return flo
        k = Fraction(flo + 1)  # lo < k <= hi
        s = x.minpoly.sign_at(k)
        if s == 0:
            # the isolated root is exactly this integer
            x.isolating = DyadicInterval(k, k)
            x._sign_lo = None
            return flo + 1
        if k == hi:
            # root lies strictly below hi, so no integer is inside
            return flo
        if s == x._endpoint_sign():
            x.isolating = DyadicInterval(k, hi)
            x._sign_lo = s
        else:
            x.isolating = DyadicInterval(lo, k)


def _poly_add_scaled(acc: list[int], term: IntPolynomial, scale: int) -> None:
    for j, c in enumerate(term.coeffs):
        acc[j] += scale * c


def moebius_minpoly(m: Mat2, p: IntPolynomial) -> IntPolynomial:
    """Squarefree polynomial vanishing at (a x + b)/(c x + d) for roots x of p."""
    deg = p.degree
    num = IntPolynomial.from_coeffs([-m.b, m.d])  # d*y - b
    den = IntPolynomial.from_coeffs([m.a, -m.c])  # a - c*y
    pows_num = [IntPolynomial((1,))]
    pows_den = [IntPolynomial((1,))]
    for _ in range(deg):
        pows_num.append(pows_num[-1].mul(num))
        pows_den.append(pows_den[-1].mul(den))
    acc = [0] * (deg + 1)
    for i, ci in enumerate(p.coeffs):
        if ci:
            _poly_add_scaled(acc, pows_num[i].mul(pows_den[deg - i]), ci)
    q = IntPolynomial.from_coeffs(acc)
    return squarefree_part(q)


def moebius_apply(m, x: AlgebraicNumber, *, bits: int = 64) -> AlgebraicNumber:
    """Image of x under the fractional linear map (a x + b)/(c x + d)."""
    if not isinstance(m, Mat2):
        m = Mat2(*m)
    if abs(m.det()) != 1:
        raise ValueError("matrix determinant must be +-1")
    rat = x.rational_value()
    if rat is not None:
        den = m.c * rat + m.d
        if den == 0:
            raise ZeroDivisionError("pole: c*x + d = 0")
        return AlgebraicNumber.from_rational((m.a * rat + m.b) / den)
    q = moebius_minpoly(m, x.minpoly)
    work = bits
    while work <= REFINE_HARD_CAP:
        iv = x.value_interval(work)
        den_iv = m.c * iv + Fraction(m.d)
        if den_iv.contains_zero():
            work *= 2
            continue
        img = (m.a * iv + Fraction(m.b)) / den_iv
        scale = 1 << (work + 8)
        dlo = Fraction(floor(img.lo * scale), scale)
        dhi = Fraction(-floor(-img.hi * scale), scale)
        if q.sign_at(dlo) != 0 and q.sign_at(dhi) != 0:
            if count_roots_in(q, dlo, dhi) == 1:
                return AlgebraicNumber(q, DyadicInterval(dlo, dhi))
        work *= 2
    raise RuntimeError("failed to isolate Moebius image")


def quadratic_conjugate(x: AlgebraicNumber) -> AlgebraicNumber:
    """The other root of a quadratic's minimal polynomial."""
    if x.degree != 2:
        raise ValueError("conjugate defined only for quadratics")
    roots = isolate_real_roots(x.minpoly)
    if len(roots) != 2:
        raise ValueError("polynomial has no real conjugate pair")
    bits = 16
    while bits <= REFINE_HARD_CAP:
        x.refine_to(bits)
        for r in roots:
            r.refine_to(bits)
        apart = [
            r
            for r in roots
            if r.isolating.hi < x.isolating.lo or r.isolating.lo > x.isolating.hi
        ]
        if len(apart) == 1:
            return apart[0]
        if len(apart) == 2:
            raise ValueError("x is not a root of its own minimal polynomial")
        bits *= 2
    raise RuntimeError("could not separate conjugate roots")


def _equals_rational(x: AlgebraicNumber, r: Fraction) -> bool:
    # the isolating interval holds exactly one root of minpoly, so a rational
    # root of minpoly inside the interval is x itself
    if x.minpoly.sign_at(r) != 0:
        return False
    return x.isolating.lo <= r <= x.isolating.hi


def alg_equal(x: AlgebraicNumber, y: AlgebraicNumber) -> bool:
    """Exact equality via common squarefree factor plus interval separation."""
    rx, ry = x.rational_value(), y.rational_value()
    if rx is not None and ry is not None:
        return rx == ry
    if rx is not None:
        return _equals_rational(y, rx)
    if ry is not None:
        return _equals_rational(x, ry)
    g = poly_gcd(x.minpoly, y.minpoly)
    if g.degree == 0:
        return False
    bits = 16
    while bits <= REFINE_HARD_CAP:
        ix = x.value_interval(bits)
        iy = y.value_interval(bits)
        if x.is_degenerate() or y.is_degenerate():
            return alg_equal(x, y)  # rationality discovered during refinement
        if ix.hi < iy.lo or iy.hi < ix.lo:
            return False
        # interval endpoints are never roots for a non-degenerate interval
        cx = count_roots_in(g, ix.lo, ix.hi)
        cy = count_roots_in(g, iy.lo, iy.hi)
        if cx == 0 or cy == 0:
            return False
        lo, hi = min(ix.lo, iy.lo), max(ix.hi, iy.hi)
        if count_roots_in(g, lo, hi) == 1:
            return True
        bits *= 2
    raise RuntimeError("equality test did not converge")
