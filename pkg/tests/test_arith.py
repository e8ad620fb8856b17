from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from secplanes.arith import ExactRational, as_integer, binomial, factorial, generalized_binomial
from secplanes.errors import IntegralityError

from oracles import binomial_bruteforce


@pytest.mark.parametrize("n,k,expected", [(5, 2, 10), (3, 5, 0), (0, 0, 1), (4, -1, 0)])
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


@pytest.mark.parametrize("n,expected", [(0, 1), (4, 24), (10, 3628800)])
def test_factorial_examples(n, expected):
    assert factorial(n) == expected


def test_negative_arguments_rejected():
    with pytest.raises(ValueError):
        binomial(-1, 0)
    with pytest.raises(ValueError):
        factorial(-3)


def test_binomial_matches_subset_enumeration():
    for n in range(0, 11):
        for k in range(-1, n + 2):
            assert binomial(n, k) == (binomial_bruteforce(n, k) if 0 <= k <= n else 0)


def test_symmetry_and_pascal_exhaustive():
    for n in range(0, 65):
        for k in range(0, n + 1):
            assert binomial(n, k) == binomial(n, n - k)
            if n >= 1:
                assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_big_values_stay_exact():
    v = binomial(200, 100)
    assert v > 10**58
    assert v == factorial(200) // (factorial(100) ** 2)


def test_generalized_binomial():
    assert generalized_binomial(-1, 0) == 1
    assert generalized_binomial(-1, 3) == -1
    assert generalized_binomial(-2, 2) == 3
    assert generalized_binomial(7, -1) == 0
    for n in range(0, 12):
        for k in range(0, 14):
            assert generalized_binomial(n, k) == binomial(n, k)


@given(st.integers(-50, 50), st.integers(0, 10))
def test_generalized_binomial_is_falling_factorial(n, k):
    num = Fraction(1)
    for t in range(k):
        num *= Fraction(n - t, t + 1)
    assert generalized_binomial(n, k) == num


fractions = st.fractions(max_denominator=10**6)


@given(fractions, fractions, fractions)
def test_rational_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)


@given(st.integers(-10**30, 10**30), st.integers(1, 10**30))
def test_rational_normalization(p, q):
    x = ExactRational(p, q)
    assert x.denominator > 0
    assert ExactRational(x.numerator, x.denominator) == x
    from math import gcd
    assert gcd(x.numerator, x.denominator) == 1


def test_as_integer():
    assert as_integer(Fraction(12, 4)) == 3
    with pytest.raises(IntegralityError):
        as_integer(Fraction(1, 2))
