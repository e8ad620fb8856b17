"""Castelnuovo's count of (2r-2)-secant (r-2)-planes and Cayley's r = 3 form."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple

from .arith import as_integer, generalized_binomial
from .series import rho_value

GENERAL_SUM = "GENERAL_SUM"
CAYLEY_R3 = "CAYLEY_R3"

OUT_OF_HYPOTHESIS = "out-of-hypothesis"


@dataclass(frozen=True)
class SecantCount:
    value: int
    d: int
    g: int
    r: int
    formula: str
    flags: Tuple[str, ...] = field(default=())

    @property
    def valid(self) -> bool:
        return OUT_OF_HYPOTHESIS not in self.flags


def _hypothesis_flags(d: int, g: int, r: int) -> Tuple[str, ...]:
    ok = (
        r >= 3
        and d >= 3 * r - 2
        and g >= 0
        and rho_value(g, r, d) >= 0
        and rho_value(g, 1, d - 2 * r + 2) >= 0
    )
    return () if ok else (OUT_OF_HYPOTHESIS,)


def castelnuovo_terms(d: int, g: int, r: int) -> List[Fraction]:
    """The r summands (-1)^i/(r-i) C(d-r-i+1, r-1-i) C(d-r-i, r-1-i) C(g, i)."""
    terms = []
    for i in range(r):
        k = r - 1 - i
        coeff = (
            generalized_binomial(d - r - i + 1, k)
            * generalized_binomial(d - r - i, k)
            * generalized_binomial(g, i)
        )
        terms.append(Fraction((-1) ** i * coeff, r - i))
    return terms


def castelnuovo(d: int, g: int, r: int) -> SecantCount:
    """C(d, g, r), evaluated exactly.

    Meaningful as a count only for r >= 3, d >= 3r - 2, rho(g, r, d) >= 0 and
    rho(g, 1, d - 2r + 2) >= 0; outside that range the polynomial is still
    evaluated and the result carries the ``out-of-hypothesis`` flag.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if g < 0:
        raise ValueError(f"g must be >= 0, got {g}")
    value = as_integer(sum(castelnuovo_terms(d, g, r), Fraction(0)), f"C({d}, {g}, {r})")
    return SecantCount(value, d, g, r, GENERAL_SUM, _hypothesis_flags(d, g, r))


def cayley_r3(d: int, g: int) -> SecantCount:
    """(d-2)(d-3)^2(d-4)/12 - g(d^2 - 7d + 13 - g)/2."""
    q = Fraction((d - 2) * (d - 3) ** 2 * (d - 4), 12) - Fraction(g * (d * d - 7 * d + 13 - g), 2)
    value = as_integer(q, f"Cayley({d}, {g})")
    return SecantCount(value, d, g, 3, CAYLEY_R3, _hypothesis_flags(d, g, 3))


def consistency_check(d_max: int, g_max: int, d_min: int = 4):
    """Compare the general sum at r = 3 against Cayley's closed form.

    Returns ``(mismatches, values)`` where ``mismatches`` lists
    ``(d, g, general, cayley)`` tuples and ``values`` maps (d, g) to the
    agreed count.
    """
    mismatches = []
    values = {}
    for d in range(d_min, d_max + 1):
        for g in range(0, g_max + 1):
            a = castelnuovo(d, g, 3).value
            b = cayley_r3(d, g).value
            if a != b:
                mismatches.append((d, g, a, b))
            else:
                values[(d, g)] = a
    return mismatches, values
