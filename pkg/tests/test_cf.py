import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cfspectra import (
    CFExpansion,
    IntPolynomial,
    Mat2,
    convergents,
    detect_period,
    expand,
    growth_metrics,
    integer_nth_root,
    isolate_real_roots,
    verify_cf_identities,
    word_matrix,
)

from conftest import root_of

words = st.lists(st.integers(min_value=1, max_value=9), min_size=1, max_size=20)


class TestExpansion:
    def test_sqrt2(self, sqrt2):
        cf = expand(sqrt2, 12)
        assert cf.a0 == 1
        assert cf.quotients == [2] * 12
        assert not cf.terminated

    def test_cbrt2_prefix(self, cbrt2):
        cf = expand(cbrt2, 10)
        assert cf.word() == (1, 3, 1, 5, 1, 1, 4, 1, 1, 8, 1)

    def test_rational_terminates(self):
        x = isolate_real_roots(IntPolynomial.from_coeffs([-10, 7]))[0]  # 10/7
        cf = expand(x, 50)
        assert (cf.a0, cf.quotients, cf.terminated) == (1, [2, 3], True)
        assert cf.value() == Fraction(10, 7)

    def test_negative_number(self):
        x = root_of([-2, 0, 1], 0)  # -sqrt(2) = [-2; 1, 1, 2, 2, ...]
        cf = expand(x, 6)
        assert cf.word() == (-2, 1, 1, 2, 2, 2, 2)

    def test_depth_zero(self, golden):
        cf = expand(golden, 0)
        assert cf.word() == (1,)


class TestConvergents:
    def test_fixture(self):
        cf = CFExpansion(0, [1, 2, 3])
        assert convergents(cf) == [(0, 1), (1, 1), (2, 3), (7, 10)]

    def test_seeds(self):
        cf = CFExpansion(5, [])
        assert cf.convergent(-2) == (0, 1)
        assert cf.convergent(-1) == (1, 0)
        assert cf.convergent(0) == (5, 1)

    def test_value_interval_brackets(self, sqrt2):
        cf = expand(sqrt2, 8)
        iv = cf.value_interval()
        assert iv.lo * iv.lo < 2 < iv.hi * iv.hi


class TestWordMatrix:
    def test_fixture(self):
        assert word_matrix((0, 1, 2, 3)) == Mat2(7, 2, 10, 3)

    @given(words)
    def test_matches_convergents(self, w):
        m = word_matrix(w)
        cf = CFExpansion(w[0], list(w[1:]))
        p, q = cf.convergent(len(w) - 1)
        p1, q1 = cf.convergent(len(w) - 2)
        assert (m.a, m.b, m.c, m.d) == (p, p1, q, q1)

    @given(words, words)
    def test_homomorphism(self, u, v):
        assert word_matrix(u + v) == word_matrix(u) @ word_matrix(v)

    @given(words)
    def test_reversal_is_transpose(self, w):
        assert word_matrix(w[::-1]) == word_matrix(w).transpose()


class TestPeriods:
    def test_sqrt2(self, sqrt2):
        form = detect_period(sqrt2)
        assert form.preperiod == (1,)
        assert form.period == (2,)

    def test_sqrt7(self):
        form = detect_period(root_of([-7, 0, 1]))
        assert form.preperiod == (2,)
        assert form.period == (1, 1, 1, 4)

    def test_golden(self, golden):
        form = detect_period(golden)
        assert form.preperiod == ()
        assert form.period == (1,)

    def test_negative_surd(self):
        x = root_of([-2, 0, 1], 0)
        form = detect_period(x)
        word = form.expand_word(3)
        cf = expand(x, len(word) - 1)
        assert cf.word() == word

    def test_roundtrip_three_periods(self):
        for coeffs in ([-2, 0, 1], [-7, 0, 1], [-1, -1, 1], [-13, 0, 1], [-3, 4, 2]):
            x = root_of(coeffs)
            form = detect_period(x)
            word = form.expand_word(3)
            cf = expand(x, len(word) - 1)
            assert cf.word() == word

    def test_period_is_minimal(self):
        # sqrt(13) = [3; 1,1,1,1,6]: naive cycle detection returns the cycle
        # possibly repeated; the reported period must be the shortest
        form = detect_period(root_of([-13, 0, 1]))
        assert form.period == (1, 1, 1, 1, 6)

    def test_rejects_non_quadratic(self, cbrt2):
        with pytest.raises(ValueError):
            detect_period(cbrt2)


class TestIdentities:
    def test_all_pass_sqrt2(self, sqrt2):
        cf = expand(sqrt2, 51)
        report = verify_cf_identities(cf, 50)
        assert report.all_pass
        assert report.approximation is not None

    def test_all_pass_random_word(self):
        rng = random.Random(7)
        w = [rng.randint(1, 9) for _ in range(40)]
        report = verify_cf_identities(CFExpansion(w[0], w[1:]), 39)
        assert report.all_pass
        assert report.approximation is None  # no source number attached


class TestGrowth:
    def test_integer_nth_root(self):
        assert integer_nth_root(0, 3) == 0
        assert integer_nth_root(26, 3) == 2
        assert integer_nth_root(27, 3) == 3
        assert integer_nth_root(10**60, 4) == 10**15
        r = integer_nth_root(3**100, 7)
        assert r**7 <= 3**100 < (r + 1) ** 7

    @given(st.integers(min_value=0, max_value=10**30), st.integers(min_value=1, max_value=8))
    def test_nth_root_bracket(self, n, k):
        r = integer_nth_root(n, k)
        assert r**k <= n and (r + 1) ** k > n

    def test_growth_metrics_golden(self, golden):
        cf = expand(golden, 60)
        rep = growth_metrics(cf)
        # q_n^(1/n) tends to the golden ratio
        assert Fraction(16, 10) < rep.M.hi < Fraction(17, 10)

    def test_growth_metrics_pair(self, sqrt2, golden):
        rep = growth_metrics(expand(sqrt2, 30), expand(golden, 30))
        assert rep.M.lo > 1
