"""Vanishing thresholds for powers L^n of a ramified g^r_d at a general point.

All thresholds are strict upper bounds T: for every positive a < T,
h^0(L^n(-ap)) = h^0(L^n) - a on a general pointed curve. Nothing here is a
statement about a particular curve.
"""
from __future__ import annotations

from dataclasses import dataclass

from .series import SchubertIndex, SeriesParams, rho_ramified


@dataclass(frozen=True)
class PowerBound:
    n: int
    threshold: int
    m: int
    rho_adj: int
    claim: str = ""


def _claim(n, threshold):
    return (
        f"general pointed curve: h0(L^{n}(-a p)) = h0(L^{n}) - a "
        f"for every integer 0 < a < {threshold}"
    )


def power_bound(g: int, r: int, d: int, alpha: SchubertIndex, n: int) -> PowerBound:
    """T = n d - rho(g, r, d, alpha) - g - floor(g / m), m = floor((n+1)/2); n >= 3."""
    if n < 3:
        raise ValueError(f"power_bound needs n >= 3 (use square_bound for n = 2), got {n}")
    rho_adj = rho_ramified(SeriesParams(g, r, d), alpha)
    m = (n + 1) // 2
    t = n * d - rho_adj - g - g // m
    return PowerBound(n, t, m, rho_adj, _claim(n, t))


def square_bound(g: int, r: int, d: int, alpha: SchubertIndex) -> PowerBound:
    rho_adj = rho_ramified(SeriesParams(g, r, d), alpha)
    first = 2 * d + 2 - 2 * g - rho_adj + (g - 1) // 2
    second = 2 * d + 2 - 2 * g - 2 * rho_adj + 2 * (g // 3)
    t = max(first, second)
    return PowerBound(2, t, 1, rho_adj, _claim(2, t))


def riemann_roch_ceiling(n: int, d: int, g: int) -> int:
    """Largest a allowed by Riemann-Roch: n d - g + 1."""
    return n * d - g + 1


def dn_theta_coefficient(n: int) -> int:
    """Multiple of theta representing the class of D_n, i.e. n^2."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return n * n
