"""PSL(2,Z) enumeration, norms, best-approximant scanning, and the
separation / growth-gap lemma checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, gcd

from .algebraic import AlgebraicNumber, alg_equal, moebius_apply, quadratic_conjugate
from .cf import CFExpansion
from .enclose import log_ratio_enclosure
from .intervals import FInterval
from .matrices import Mat2


def psl2z_normalize(m) -> Mat2:
    """Projective representative with c > 0, or c = 0 and d > 0."""
    if not isinstance(m, Mat2):
        m = Mat2(*m)
    if abs(m.det()) != 1:
        raise ValueError("determinant must be +-1")
    if m.c < 0 or (m.c == 0 and m.d < 0):
        m = -m
    return m


def norm_of(m: Mat2) -> int:
    """Matrix height max(|c|, |d|)."""
    return m.norm()


def quadratic_norm(m: Mat2, alpha: AlgebraicNumber, bits: int = 64) -> FInterval:
    """Enclosure of |(c a + d)(c a^s + d) / (a - a^s)| for quadratic a."""
    if alpha.degree != 2:
        raise ValueError("quadratic norm requires a quadratic irrational")
    conj = quadratic_conjugate(alpha)
    work = bits
    while True:
        a = alpha.value_interval(work)
        s = conj.value_interval(work)
        num = (m.c * a + Fraction(m.d)) * (m.c * s + Fraction(m.d))
        den = a - s
        if not den.contains_zero():
            return (num / den).abs()
        work *= 2


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def enumerate_bottom_rows(height: int):
    """Coprime (c, d) with max(|c|, |d|) <= height, normalized orientation."""
    if height < 1:
        raise ValueError("height must be >= 1")
    yield (0, 1)
    for c in range(1, height + 1):
        for d in range(-height, height + 1):
            if gcd(c, abs(d)) == 1:
                yield (c, d)


def complete_unimodular(c: int, d: int, det: int) -> Mat2:
    """Some (a, b) completing the bottom row to determinant det."""
    g, u, v = _egcd(d, c)
    if g != 1:
        raise ValueError("bottom row must be coprime")
    # u*d + v*c = 1 -> (u)*d - (-v)*c = 1
    if det == 1:
        return Mat2(u, -v, c, d)
    if det == -1:
        return Mat2(-u, v, c, d)
    raise ValueError("det must be +-1")


@dataclass(frozen=True)
class ApproxRecord:
    matrix: Mat2
    norm: object  # int (classic) or FInterval (quadratic mode)
    distance: FInterval
    exponent: FInterval

    def to_dict(self) -> dict:
        nrm = self.norm if isinstance(self.norm, int) else [str(self.norm.lo), str(self.norm.hi)]
        return {
            "matrix": [self.matrix.a, self.matrix.b, self.matrix.c, self.matrix.d],
            "norm": nrm,
            "distance": [str(self.distance.lo), str(self.distance.hi)],
            "exponent": [float(self.exponent.lo), float(self.exponent.hi)],
        }


@dataclass
class OrbitScanResult:
    records: list[ApproxRecord] = field(default_factory=list)
    xi_in_orbit: list[Mat2] = field(default_factory=list)

    def exceedances(self, eps: Fraction) -> dict:
        """Records certified above the 1+eps and 2+eps exponent thresholds."""
        eps = Fraction(eps)
        return {
            "above_1_plus_eps": [r for r in self.records if r.exponent.lo > 1 + eps],
            "above_2_plus_eps": [r for r in self.records if r.exponent.lo > 2 + eps],
        }


def _xi_interval(xi, bits: int) -> FInterval:
    if isinstance(xi, AlgebraicNumber):
        return xi.value_interval(bits)
    if isinstance(xi, CFExpansion):
        return xi.value_interval()
    raise TypeError("xi must be an AlgebraicNumber or a CFExpansion")


def _exponent(distance: FInterval, norm) -> FInterval | None:
    if distance.lo <= 0:
        return None
    inv = FInterval(1 / distance.hi, 1 / distance.lo)
    if isinstance(norm, int):
        if norm < 2:
            return None
        norm_iv: object = Fraction(norm)
    else:
        if norm.lo <= 1:
            return None
        norm_iv = norm
    return log_ratio_enclosure(inv, norm_iv)


def rational_baseline_scan(
    xi, height: int, bits: int = 256, min_norm: int = 2
) -> OrbitScanResult:
    """The alpha = infinity specialization: approximation by rationals a/c.

    Only the two integers nearest c*xi matter for each denominator, so the
    scan is linear in the height. Denominators below min_norm are skipped;
    tiny denominators carry trivially inflated exponents.
    """
    result = OrbitScanResult()
    xi_iv = _xi_interval(xi, bits)
    mid = (xi_iv.lo + xi_iv.hi) / 2
    best_hi = Fraction(0)
    for c in range(max(2, min_norm), height + 1):
        for a in (floor(c * mid), floor(c * mid) + 1):
            if gcd(abs(a), c) != 1:
                continue
            dist = (xi_iv - Fraction(a, c)).abs()
            if dist.hi == 0:
                result.xi_in_orbit.append(complete_unimodular(c, _small_d(a, c), 1))
                continue
            if dist.lo > 0 and best_hi >= 2 and dist.lo * c * c > 1:
                continue  # exponent at most 2, cannot improve the running best
            exp = _exponent(dist, c)
            if exp is None:
                continue
            if exp.hi > best_hi:
                best_hi = exp.hi
                result.records.append(
                    ApproxRecord(complete_unimodular(c, _small_d(a, c), 1), c, dist, exp)
                )
    result.records.sort(key=lambda r: r.norm if isinstance(r.norm, int) else r.norm.lo)
    return result


def _small_d(a: int, c: int) -> int:
    # smallest |d| with a*d = +-1 (mod c), so the completion has norm c
    if c == 1:
        return 0
    _, u, _ = _egcd(a % c, c)
    d = u % c
    if d > c // 2:
        d -= c
    return d


def orbit_best_approximations(
    xi,
    alpha: AlgebraicNumber | None,
    height: int,
    mode: str = "classic",
    *,
    bits: int = 192,
    min_norm: int = 2,
    translate_window: int | None = None,
) -> OrbitScanResult:
    """Scan the PSL(2,Z) orbit of alpha for good approximants to xi.

    Records improve the running best exponent and come back sorted by norm.
    alpha=None selects the rational baseline (orbit of infinity).
    """
    if alpha is None:
        return rational_baseline_scan(xi, height, bits=bits, min_norm=min_norm)
    result = OrbitScanResult()
    xi_iv = _xi_interval(xi, bits)
    xi_mid = (xi_iv.lo + xi_iv.hi) / 2
    a_iv = alpha.value_interval(bits)
    best_hi = Fraction(0)
    candidates = []
    for c, d in enumerate_bottom_rows(height):
        den = c * a_iv + Fraction(d)
        if den.contains_zero():
            alpha.refine_to(bits * 2)
            a_iv = alpha.value_interval(bits * 2)
            den = c * a_iv + Fraction(d)
            if den.contains_zero():
                continue
        for det in (1, -1):
            base = complete_unimodular(c, d, det)
            beta0 = (base.a * a_iv + Fraction(base.b)) / den
            beta0_mid = (beta0.lo + beta0.hi) / 2
            t_opt = floor(xi_mid - beta0_mid + Fraction(1, 2))
            if translate_window is None:
                ts = (t_opt - 1, t_opt, t_opt + 1)
            else:
                ts = range(t_opt - translate_window, t_opt + translate_window + 1)
            for t in ts:
                m = psl2z_normalize(Mat2(base.a + t * c, base.b + t * d, c, d))
                candidates.append((m, beta0 + Fraction(t)))
    if mode not in ("classic", "quadratic"):
        raise ValueError("mode must be 'classic' or 'quadratic'")
    for m, beta in candidates:
        dist = (xi_iv - beta).abs()
        if dist.lo <= 0:
            # possible orbit hit; decide exactly when xi is algebraic
            if isinstance(xi, AlgebraicNumber) and alg_equal(moebius_apply(m, alpha), xi):
                result.xi_in_orbit.append(m)
            continue  # else: unresolved tiny distance; skip rather than overclaim
        if mode == "quadratic":
            nrm: object = quadratic_norm(m, alpha, bits=64)
            if not (nrm.hi <= height):
                continue
        else:
            nrm = norm_of(m)
            if nrm < min_norm:
                continue
        exp = _exponent(dist, nrm)
        if exp is None:
            continue
        if exp.hi > best_hi:
            best_hi = exp.hi
            result.records.append(ApproxRecord(m, nrm, dist, exp))
    result.records.sort(key=lambda r: r.norm if isinstance(r.norm, int) else r.norm.lo)
    return result


@dataclass
class SeparationResult:
    n: int
    bound: Fraction
    distance: FInterval
    ok: bool


def separation_bound(alpha_cf: CFExpansion, beta_cf: CFExpansion) -> SeparationResult:
    """First divergence index and the 1/(72 q_n^2 b_{n+1} b_{n+2}) lower bound.

    Quotient indexing follows the expansions: index 0 is a0. The bound uses
    beta's convergents and quotients.
    """
    wa, wb = alpha_cf.word(), beta_cf.word()
    n = None
    for i in range(min(len(wa), len(wb))):
        if wa[i] != wb[i]:
            n = i
            break
    if n is None:
        raise ValueError("no divergence found within the available depth")
    if n + 2 >= len(wb):
        raise ValueError("beta expansion too shallow past the divergence point")
    _, q_n = beta_cf.convergent(n)
    if q_n == 0:
        raise ValueError("divergence at index 0 needs a nonzero q_0")
    b1, b2 = wb[n + 1], wb[n + 2]
    bound = Fraction(1, 72 * q_n * q_n * b1 * b2)
    dist = (alpha_cf.value_interval() - beta_cf.value_interval()).abs()
    return SeparationResult(n, bound, dist, dist.hi >= bound)


def growth_gap_scan(cf: CFExpansion, k: int, eps) -> list[int]:
    """All n with q_{n+k} > q_n^(1+eps), via exact integer powering."""
    eps = Fraction(eps)
    if k < 1 or eps <= 0:
        raise ValueError("need k >= 1 and eps > 0")
    u, v = eps.numerator, eps.denominator
    hits = []
    for n in range(1, cf.depth - k + 1):
        _, qn = cf.convergent(n)
        _, qnk = cf.convergent(n + k)
        if qnk**v > qn ** (v + u):
            hits.append(n)
    return hits


def norm_equivalence_estimate(
    alpha: AlgebraicNumber, a0: Mat2, height: int
) -> tuple[Fraction, Fraction]:
    """Empirical min/max of ||A|| / ||A A0^-1|| over matrices up to the height.

    Evidence for the two-sided norm comparison between the alpha and
    alpha' = A0 alpha coordinates; not a proof.
    """
    a0 = psl2z_normalize(a0)
    # the adjugate inverts up to det = +-1, which is invisible projectively
    lo = hi = None
    for c, d in enumerate_bottom_rows(height):
        for det in (1, -1):
            m = complete_unimodular(c, d, det)
            other = psl2z_normalize(m @ a0.adjugate())
            ratio = Fraction(norm_of(psl2z_normalize(m)), norm_of(other))
            lo = ratio if lo is None or ratio < lo else lo
            hi = ratio if hi is None or ratio > hi else hi
    return lo, hi
