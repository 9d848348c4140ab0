from fractions import Fraction

import pytest

from cfspectra import IntPolynomial, isolate_real_roots


def root_of(coeffs, index=-1):
    """Real root of the polynomial with the given low-first coefficients."""
    return isolate_real_roots(IntPolynomial.from_coeffs(coeffs))[index]


@pytest.fixture
def sqrt2():
    return root_of([-2, 0, 1])


@pytest.fixture
def sqrt3():
    return root_of([-3, 0, 1])


@pytest.fixture
def golden():
    return root_of([-1, -1, 1])


@pytest.fixture
def cbrt2():
    return root_of([-2, 0, 0, 1])


def frac(a, b=1):
    return Fraction(a, b)
