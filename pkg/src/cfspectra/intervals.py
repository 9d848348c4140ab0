"""Exact rational interval arithmetic used for certified enclosures."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class FInterval:
    """Closed interval with rational endpoints; operations never undershoot."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("interval endpoints out of order")

    @staticmethod
    def point(x) -> "FInterval":
        f = Fraction(x)
        return FInterval(f, f)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        if not isinstance(x, FInterval):
            x = Fraction(x)
            return self.lo <= x <= self.hi
        return self.lo <= x.lo and x.hi <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def __add__(self, other):
        other = _coerce(other)
        return FInterval(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other):
        other = _coerce(other)
        return FInterval(self.lo - other.hi, self.hi - other.lo)

    def __neg__(self):
        return FInterval(-self.hi, -self.lo)

    def __mul__(self, other):
        other = _coerce(other)
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return FInterval(min(products), max(products))

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return _coerce(other) - self

    def __truediv__(self, other):
        other = _coerce(other)
        if other.contains_zero():
            raise ZeroDivisionError("interval divisor straddles zero")
        inv = FInterval(1 / other.hi, 1 / other.lo)
        return self * inv

    def abs(self) -> "FInterval":
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return FInterval(Fraction(0), max(-self.lo, self.hi))


def _coerce(x) -> FInterval:
    if isinstance(x, FInterval):
        return x
    return FInterval.point(x)
