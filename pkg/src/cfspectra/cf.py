"""Certified continued-fraction expansion and the classical identities.

The expander tracks the exact unimodular matrix that maps the input number to
the current complete quotient, so every partial quotient is decided by integer
sign tests and no error ever accumulates, at any depth.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, isqrt

from .algebraic import AlgebraicNumber, _equals_rational
from .errors import PrecisionExhausted
from .intervals import FInterval
from .matrices import Mat2

PRECISION_CAP_BITS = 1 << 16


@dataclass
class CFExpansion:
    """a0 plus positive partial quotients, with lazily built convergents."""

    a0: int
    quotients: list[int]
    source: AlgebraicNumber | None = None
    terminated: bool = False
    _pq: list[tuple[int, int]] = field(default_factory=list, repr=False)

    def __post_init__(self):
        for a in self.quotients:
            if a < 1:
                raise ValueError("partial quotients must be >= 1")

    @property
    def depth(self) -> int:
        return len(self.quotients)

    def word(self) -> tuple[int, ...]:
        """Full quotient word including a0."""
        return (self.a0, *self.quotients)

    def convergent(self, n: int) -> tuple[int, int]:
        """(p_n, q_n) for n >= -2."""
        if n < -2:
            raise IndexError("convergent index below -2")
        if n > self.depth:
            raise IndexError("convergent index beyond computed quotients")
        if n == -2:
            return (0, 1)
        if n == -1:
            return (1, 0)
        if not self._pq:
            p2, p1 = 0, 1
            q2, q1 = 1, 0
            for a in self.word():
                p2, p1 = p1, a * p1 + p2
                q2, q1 = q1, a * q1 + q2
                self._pq.append((p1, q1))
        return self._pq[n]

    def value(self) -> Fraction:
        """Exact value of the finite expansion."""
        p, q = self.convergent(self.depth)
        return Fraction(p, q)

    def value_interval(self) -> FInterval:
        """Enclosure of any real whose expansion starts with this word."""
        if self.terminated:
            v = self.value()
            return FInterval(v, v)
        n = self.depth
        if n == 0:
            return FInterval(Fraction(self.a0), Fraction(self.a0 + 1))
        pn, qn = self.convergent(n)
        pm, qm = self.convergent(n - 1)
        a, b = Fraction(pn, qn), Fraction(pn + pm, qn + qm)
        return FInterval(min(a, b), max(a, b))


def convergents(cf: CFExpansion) -> list[tuple[int, int]]:
    """[(p_0, q_0), ..., (p_N, q_N)] as exact coprime pairs."""
    return [cf.convergent(n) for n in range(cf.depth + 1)]


def word_matrix(word) -> Mat2:
    """Product of [[b, 1], [1, 0]] over the letters of the word."""
    letters = tuple(word)
    if not letters:
        raise ValueError("word must be nonempty")
    m = Mat2.identity()
    for b in letters:
        m = m @ Mat2(b, 1, 1, 0)
    return m


def _rational_cf(r: Fraction, depth: int) -> tuple[int, list[int], bool]:
    a0 = floor(r)
    quotients: list[int] = []
    frac = r - a0
    terminated = frac == 0
    while frac != 0 and len(quotients) < depth:
        r = 1 / frac
        a = floor(r)
        quotients.append(a)
        frac = r - a
        terminated = frac == 0
    return a0, quotients, terminated


def _moebius_floor(x: AlgebraicNumber, m: Mat2, cap: int) -> tuple[int, bool]:
    """Certified floor of (a x + b)/(c x + d); second value flags exactness.

    Exactness (the complete quotient being an integer) only occurs for
    rational x and ends the expansion.
    """
    w = x.isolating.width
    wbits = 0 if w == 0 else w.denominator.bit_length() - w.numerator.bit_length()
    bits = max(64, wbits + 32)
    tie_checked = False
    while True:
        lo, hi = x.isolating.lo, x.isolating.hi
        un, ud = lo.numerator, lo.denominator
        vn, vd = hi.numerator, hi.denominator
        d1 = m.c * un + m.d * ud
        d2 = m.c * vn + m.d * vd
        if d1 != 0 and d2 != 0 and (d1 > 0) == (d2 > 0):
            n1 = m.a * un + m.b * ud
            n2 = m.a * vn + m.b * vd
            f1 = n1 // d1 if d1 > 0 else (-n1) // (-d1)
            f2 = n2 // d2 if d2 > 0 else (-n2) // (-d2)
            if f1 == f2:
                return f1, False
            if abs(f1 - f2) == 1 and not tie_checked:
                # complete quotient may be exactly the integer k
                k = max(f1, f2)
                den = m.a - k * m.c
                num = k * m.d - m.b
                if den != 0 and _equals_rational(x, Fraction(num, den)):
                    return k, True
                tie_checked = True
        if bits > cap:
            raise PrecisionExhausted(
                "floor undecided at precision cap", x.isolating.as_finterval()
            )
        x.refine_to(bits)
        bits *= 2


def expand(x: AlgebraicNumber, depth: int, *, precision_cap: int = PRECISION_CAP_BITS) -> CFExpansion:
    """First `depth` certified partial quotients of x."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    rat = x.rational_value()
    if rat is not None:
        a0, qs, term = _rational_cf(rat, depth)
        return CFExpansion(a0, qs, source=x, terminated=term)
    m = Mat2.identity()
    a0 = 0
    quotients: list[int] = []
    for n in range(depth + 1):
        rat = x.rational_value()
        if rat is not None:
            # rationality discovered mid-expansion; finish with Euclid
            num = m.a * rat.numerator + m.b * rat.denominator
            den = m.c * rat.numerator + m.d * rat.denominator
            z0, zs, term = _rational_cf(Fraction(num, den), depth - n + 1)
            if n == 0:
                return CFExpansion(z0, zs, source=x, terminated=term)
            quotients.append(z0)
            quotients.extend(zs)
            return CFExpansion(a0, quotients[: depth], source=x, terminated=term)
        a, exact = _moebius_floor(x, m, precision_cap)
        if n == 0:
            a0 = a
        else:
            quotients.append(a)
        if exact:
            return CFExpansion(a0, quotients, source=x, terminated=True)
        # zeta' = 1/(zeta - a)
        m = Mat2(m.c, m.d, m.a - a * m.c, m.b - a * m.d)
    return CFExpansion(a0, quotients, source=x, terminated=False)


@dataclass(frozen=True)
class PeriodicForm:
    """Eventually periodic word: preperiod (with a0 first) + shortest period."""

    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def expand_word(self, cycles: int) -> tuple[int, ...]:
        return self.preperiod + self.period * cycles


def detect_period(x: AlgebraicNumber) -> PeriodicForm:
    """Exact preperiod and shortest period of a quadratic irrational."""
    if x.degree != 2:
        raise ValueError("period detection requires a quadratic irrational")
    c0, c1, c2 = x.minpoly.coeffs
    a, b, c = c2, c1, c0  # a x^2 + b x + c
    disc = b * b - 4 * a * c
    if disc <= 0 or isqrt(disc) ** 2 == disc:
        raise ValueError("not a quadratic irrational")
    # decide which branch of the square root x is on
    pivot = Fraction(-b, 2 * a)
    bits = 8
    while x.isolating.lo <= pivot <= x.isolating.hi:
        x.refine_to(bits)
        bits *= 2
    plus_branch = x.isolating.lo > pivot
    if plus_branch:
        P, Q = -b, 2 * a
    else:
        P, Q = b, -2 * a
    D = disc
    sq = isqrt(D)
    seen: dict[tuple[int, int], int] = {}
    word: list[int] = []
    while (P, Q) not in seen:
        seen[(P, Q)] = len(word)
        if Q > 0:
            an = (P + sq) // Q
        else:
            an = -((P + sq) // (-Q)) - 1
        word.append(an)
        P = an * Q - P
        Q = (D - P * P) // Q
    start = seen[(P, Q)]
    pre, cycle = word[:start], word[start:]
    # shortest period: smallest divisor-length block that tiles the cycle
    n = len(cycle)
    for d in range(1, n + 1):
        if n % d == 0 and cycle == cycle[:d] * (n // d):
            cycle = cycle[:d]
            break
    # pull the period boundary as far left as possible
    while pre and pre[-1] == cycle[-1]:
        pre.pop()
        cycle = [cycle[-1]] + cycle[:-1]
    return PeriodicForm(tuple(pre), tuple(cycle))


def integer_nth_root(n: int, k: int) -> int:
    """floor(n ** (1/k)) for n >= 0, k >= 1."""
    if n < 0 or k < 1:
        raise ValueError("domain error")
    if n == 0:
        return 0
    if k == 1:
        return n
    x = 1 << (-(-n.bit_length() // k))
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x ** k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


GROWTH_FRACTIONAL_BITS = 64


@dataclass
class GrowthReport:
    """Per-n enclosures of (q_n q'_n)^(1/n) and their running maximum."""

    values: list[FInterval]
    max_enclosure: FInterval

    @property
    def M(self) -> FInterval:
        return self.max_enclosure


def growth_metrics(cf: CFExpansion, cf2: CFExpansion | None = None) -> GrowthReport:
    depth = cf.depth if cf2 is None else min(cf.depth, cf2.depth)
    if depth < 1:
        raise ValueError("need at least one partial quotient")
    scale = 1 << GROWTH_FRACTIONAL_BITS
    values = []
    for n in range(1, depth + 1):
        v = cf.convergent(n)[1] * (cf2.convergent(n)[1] if cf2 else 1)
        r = integer_nth_root(v << (GROWTH_FRACTIONAL_BITS * n), n)
        values.append(FInterval(Fraction(r, scale), Fraction(r + 1, scale)))
    max_enc = FInterval(max(v.lo for v in values), max(v.hi for v in values))
    return GrowthReport(values, max_enc)


@dataclass
class IdentityReport:
    """Pass/fail per classical identity, per index."""

    determinant: list[bool]
    mirror_ratio: list[bool]
    convergent_growth: list[bool]
    approximation: list[bool] | None

    @property
    def all_pass(self) -> bool:
        pools = [self.determinant, self.mirror_ratio, self.convergent_growth]
        if self.approximation is not None:
            pools.append(self.approximation)
        return all(all(p) for p in pools)

    def to_dict(self) -> dict:
        return {
            "determinant": self.determinant,
            "mirror_ratio": self.mirror_ratio,
            "convergent_growth": self.convergent_growth,
            "approximation": self.approximation,
            "all_pass": self.all_pass,
        }


def _finite_cf_value(letters) -> Fraction:
    v = Fraction(letters[-1])
    for a in reversed(letters[:-1]):
        v = a + 1 / v
    return v


def verify_cf_identities(cf: CFExpansion, depth: int) -> IdentityReport:
    depth = min(depth, cf.depth)
    word = cf.word()
    determinant = []
    for n in range(depth + 1):
        pn, qn = cf.convergent(n)
        pm, qm = cf.convergent(n - 1)
        determinant.append(pn * qm - pm * qn == (-1) ** (n + 1))
    mirror = []
    for n in range(1, depth + 1):
        _, qn = cf.convergent(n)
        _, qm = cf.convergent(n - 1)
        mirror.append(Fraction(qn, qm) == _finite_cf_value(word[1 : n + 1][::-1]))
    growth = []
    for n in range(1, depth):
        ok = True
        _, qn = cf.convergent(n)
        for m in range(1, depth - n + 1):
            _, qmn = cf.convergent(m + n)
            if qmn * qmn * 2 < (1 << m) * qn * qn:  # q_{m+n}^2 >= 2^(m-1) q_n^2
                ok = False
                break
        growth.append(ok)
    approximation = None
    if cf.source is not None and not cf.terminated:
        _, qN = cf.convergent(depth)
        x_iv = cf.source.value_interval(2 * qN.bit_length() + 32)
        approximation = []
        for n in range(depth):
            pn, qn = cf.convergent(n)
            _, qn1 = cf.convergent(n + 1)
            err = (x_iv - Fraction(pn, qn)).abs()
            approximation.append(err.hi < Fraction(1, qn * qn1))
    return IdentityReport(determinant, mirror, growth, approximation)
