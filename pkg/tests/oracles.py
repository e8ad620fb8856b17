"""Independent reference routines used only by the tests.

Nothing here imports the code under test.
"""
from fractions import Fraction
from itertools import permutations, product
from math import factorial


def hook_length_rectangle(rows, cols):
    """Standard Young tableaux of a rows x cols rectangle, by the hook-length formula."""
    n = rows * cols
    hooks = 1
    for i in range(rows):
        for j in range(cols):
            hooks *= (rows - i - 1) + (cols - j - 1) + 1
    return factorial(n) // hooks


def chain_count_closed_form(g, r, d):
    """g! * prod_{i=0}^{r} i! / (g-d+r+i)! for rho(g, r, d) = 0."""
    k = g - d + r
    num = Fraction(factorial(g))
    for i in range(r + 1):
        num *= Fraction(factorial(i), factorial(k + i))
    assert num.denominator == 1
    return num.numerator


def syt_rectangle_bruteforce(rows, cols):
    """Count fillings of a rows x cols grid with 1..n increasing along rows and columns,
    by inserting numbers one at a time (each new number goes to the end of some row
    whose length stays <= the row above)."""
    def rec(shape, placed):
        if placed == rows * cols:
            return 1
        total = 0
        for i in range(rows):
            if shape[i] < cols and (i == 0 or shape[i - 1] > shape[i]):
                shape[i] += 1
                total += rec(shape, placed + 1)
                shape[i] -= 1
        return total
    return rec([0] * rows, 0)


def chain_walks_bruteforce(length, r, d, start, end):
    """Try every word of stationary indices; keep those that stay strictly
    increasing, never exceed d, and finish with d - a_{r-j} - j >= end_j."""
    count = 0
    a0 = tuple(x + i for i, x in enumerate(start))
    for word in product(range(r + 1), repeat=length):
        a = list(a0)
        ok = True
        for stay in word:
            a = [x if j == stay else x + 1 for j, x in enumerate(a)]
            if any(a[j] >= a[j + 1] for j in range(r)) or a[-1] > d:
                ok = False
                break
        if ok and all(d - a[r - j] - j >= end[j] for j in range(r + 1)):
            count += 1
    return count


def catalan(n):
    return factorial(2 * n) // (factorial(n + 1) * factorial(n))


def binomial_bruteforce(n, k):
    """Count k-subsets of an n-set by enumeration."""
    from itertools import combinations
    return sum(1 for _ in combinations(range(n), k))


def castelnuovo_by_hand(d, g, r):
    """Direct transcription of the sum with explicit falling-factorial binomials."""
    def C(n, k):
        if k < 0:
            return Fraction(0)
        num = Fraction(1)
        for t in range(k):
            num *= Fraction(n - t, t + 1)
        return num
    return sum(
        Fraction((-1) ** i, r - i) * C(d - r - i + 1, r - 1 - i) * C(d - r - i, r - 1 - i) * C(g, i)
        for i in range(r)
    )


def cayley_by_hand(d, g):
    return Fraction((d - 2) * (d - 3) ** 2 * (d - 4), 12) - Fraction(g, 2) * (d * d - 7 * d + 13 - g)
