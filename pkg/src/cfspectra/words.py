"""Detectors for repetition and mirror structure in partial-quotient words.

Words are tuples of positive integers (a0 handled separately by callers).
Witnesses are self-certifying: every returned index triple re-validates by
direct slice comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction


def _as_word(w) -> tuple[int, ...]:
    letters = tuple(int(a) for a in w)
    if any(a < 1 for a in letters):
        raise ValueError("letters must be positive integers")
    return letters


def subword_complexity(w, n: int) -> int:
    """Number of distinct length-n factors of the finite word w."""
    w = _as_word(w)
    if not 1 <= n <= len(w):
        raise ValueError("factor length out of range")
    return len({w[i : i + n] for i in range(len(w) - n + 1)})


@dataclass(frozen=True)
class RepetitionWitness:
    """Prefix factorization A B A' B (or A B A' rev(B)) of one word."""

    kA: int
    kA_prime: int
    m: int
    ratio: Fraction
    mirror: bool = False

    def to_dict(self) -> dict:
        return {
            "kA": self.kA,
            "kA_prime": self.kA_prime,
            "m": self.m,
            "ratio": str(self.ratio),
            "mirror": self.mirror,
        }


@dataclass(frozen=True)
class SharedBlockWitness:
    """Offsets (k, l) and length m of a block shared by two words.

    a[k:k+m] equals a2[l:l+m], reversed when mirror is set.
    """

    k: int
    l: int
    m: int
    mirror: bool = False

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.k + self.l, self.m)

    def to_dict(self) -> dict:
        return {"k": self.k, "l": self.l, "m": self.m, "ratio": str(self.ratio), "mirror": self.mirror}


def _find_prefix_repetitions(w, L, min_b: int, mirror: bool, require_nonempty_a: bool):
    w = _as_word(w)
    L = Fraction(L)
    if L <= 0:
        raise ValueError("L must be positive")
    if min_b < 1:
        raise ValueError("minB must be >= 1")
    n = len(w)
    low = 1 if require_nonempty_a else 0
    out = []
    for m in range(min_b, n // 2 + 1):
        for ka in range(low, n - 2 * m + 1):
            block = w[ka : ka + m]
            # second copy starts at ka + m + ka2
            for ka2 in range(low, n - ka - 2 * m + 1):
                if Fraction(ka + ka2, m) > L:
                    break  # ka2 only grows; ratio is monotone in ka2
                second = w[ka + m + ka2 : ka + 2 * m + ka2]
                if second == (block[::-1] if mirror else block):
                    out.append(
                        RepetitionWitness(ka, ka2, m, Fraction(ka + ka2, m), mirror)
                    )
    out.sort(key=lambda t: (t.m, t.kA, t.kA_prime))
    return out


def find_repetitions(w, L, min_b: int = 1, *, require_nonempty_a: bool = True):
    """All prefix factorizations A B A' B with |B| >= minB and (|A|+|A'|)/|B| <= L."""
    return _find_prefix_repetitions(w, L, min_b, False, require_nonempty_a)


def find_mirror_repetitions(w, L, min_b: int = 1, *, require_nonempty_a: bool = True):
    """Like find_repetitions but with the second block reversed."""
    return _find_prefix_repetitions(w, L, min_b, True, require_nonempty_a)


def strictly_increasing_blocks(witnesses):
    """Greedy subsequence with strictly increasing |B| (condition (ii) helper)."""
    out = []
    best = 0
    for wt in witnesses:
        if wt.m > best:
            out.append(wt)
            best = wt.m
    return out


def find_shared_blocks(a, a2, L, min_b: int = 1, mirror: bool = False):
    """Maximal shared (or mirrored) blocks between two words.

    Returns witnesses (k, l, m) with m >= minB and (k+l)/m <= L; per offset
    pair only the maximal block length is reported.
    """
    a = _as_word(a)
    a2 = _as_word(a2)
    L = Fraction(L)
    if L <= 0:
        raise ValueError("L must be positive")
    out = []
    for k in range(len(a)):
        for l in range(len(a2)):
            cap = min(len(a) - k, len(a2) - l)
            best = 0
            if mirror:
                for m in range(cap, min_b - 1, -1):
                    if a[k : k + m] == a2[l : l + m][::-1]:
                        best = m
                        break
            else:
                m = 0
                while m < cap and a[k + m] == a2[l + m]:
                    m += 1
                best = m
            if best >= min_b and Fraction(k + l, best) <= L:
                out.append(SharedBlockWitness(k, l, best, mirror))
    out.sort(key=lambda t: (t.k, t.l))
    return out


def validate_witness(wt: SharedBlockWitness, a, a2) -> bool:
    a = _as_word(a)
    a2 = _as_word(a2)
    block = a[wt.k : wt.k + wt.m]
    other = a2[wt.l : wt.l + wt.m]
    if len(block) != wt.m or len(other) != wt.m:
        return False
    return block == (other[::-1] if wt.mirror else other)


def cycle_mirror_shift(A, B) -> int | None:
    """Smallest i with reverse(B) equal to the rotation of A starting at i."""
    A = _as_word(A)
    B = _as_word(B)
    if len(A) != len(B):
        raise ValueError("words must have equal length")
    rev = B[::-1]
    n = len(A)
    for i in range(1, n + 1):
        if A[i - 1 :] + A[: i - 1] == rev:
            return i
    return None


def same_tail_offset(a, a2, min_tail: int = 1) -> tuple[int, int] | None:
    """Smallest (i, j), 1-based, with a[i:] == a2[j:] on their common range."""
    if min_tail < 1:
        raise ValueError("minTail must be >= 1")
    a = _as_word(a)
    a2 = _as_word(a2)
    for i in range(1, len(a) + 1):
        for j in range(1, len(a2) + 1):
            overlap = min(len(a) - i, len(a2) - j) + 1
            if overlap < min_tail:
                continue
            if a[i - 1 : i - 1 + overlap] == a2[j - 1 : j - 1 + overlap]:
                return (i, j)
    return None


def last_letter_threshold_held(wt: SharedBlockWitness, bound: int = 3) -> bool:
    """Whether both leading segments have length at least `bound`."""
    return min(wt.k, wt.l) >= bound


def normalize_witness(wt: SharedBlockWitness, a, a2) -> SharedBlockWitness:
    """Move shared trailing letters of the A-parts into the block.

    Repeats while both A-parts are nonempty and end with the same letter; the
    block grows by one per step, so the length ratio never increases.
    """
    if wt.mirror:
        raise ValueError("normalization applies to plain witnesses only")
    a = _as_word(a)
    a2 = _as_word(a2)
    if not validate_witness(wt, a, a2):
        raise ValueError("witness does not validate against the words")
    k, l, m = wt.k, wt.l, wt.m
    while k > 0 and l > 0 and a[k - 1] == a2[l - 1]:
        k -= 1
        l -= 1
        m += 1
    return replace(wt, k=k, l=l, m=m)
