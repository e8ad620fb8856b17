"""Exact integer/rational primitives.

Counts are plain Python ints (arbitrary precision) and rationals are
:class:`fractions.Fraction`, which is always kept in lowest terms with a
positive denominator.
"""
from __future__ import annotations

import math
from fractions import Fraction

ExactRational = Fraction


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0; zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"binomial top must be non-negative, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def generalized_binomial(n: int, k: int) -> int:
    """Falling-factorial binomial n(n-1)...(n-k+1)/k! for any integer n.

    Agrees with :func:`binomial` for n >= 0. Zero for k < 0.
    """
    if k < 0:
        return 0
    if n >= 0:
        return binomial(n, k)
    # C(n, k) = (-1)^k C(k - n - 1, k) for n < 0
    return (-1) ** k * math.comb(k - n - 1, k)


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial needs n >= 0, got {n}")
    return math.factorial(n)


def as_integer(q: Fraction, what: str = "value") -> int:
    """Return ``q`` as an int, raising IntegralityError if it is not one."""
    from .errors import IntegralityError

    q = Fraction(q)
    if q.denominator != 1:
        raise IntegralityError(f"{what} is not integral: {q}")
    return q.numerator
