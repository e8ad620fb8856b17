"""Dimension and existence verdicts for the cycles V_e^{e-f}(l).

``V_e^{e-f}(l)`` is the locus of degree-e divisors imposing at most e - f
conditions on a g^r_d; for very ample l it parametrizes e-secant
(e-f-1)-planes. Every verdict here concerns a *general* curve of genus g.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Tuple, Union

from .series import rho_value

EMPTY_EXPECTED = "empty-expected"


class Status(str, Enum):
    EMPTY_GENERAL_CURVE = "EMPTY_GENERAL_CURVE"
    EXISTS_EXPECTED_DIM = "EXISTS_EXPECTED_DIM"
    HYPOTHESES_FAIL = "HYPOTHESES_FAIL"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class SecantProblem:
    g: int
    d: int
    r: int
    e: int
    f: int

    def __post_init__(self):
        if not 0 <= self.f < self.e:
            raise ValueError(f"need 0 <= f < e, got f={self.f}, e={self.e}")
        if self.r - self.e + self.f < 0:
            raise ValueError(f"need r - e + f >= 0, got r={self.r}, e={self.e}, f={self.f}")
        if self.g < 0 or self.r < 0:
            raise ValueError("genus and r must be non-negative")

    @property
    def sub_r(self) -> int:
        """Dimension r - e + f of the residual series l(-D)."""
        return self.r - self.e + self.f

    @property
    def codim(self) -> int:
        """f(r + 1 - e + f), the expected codimension of the secant condition."""
        return self.f * (self.r + 1 - self.e + self.f)

    @property
    def rho(self) -> int:
        return rho_value(self.g, self.r, self.d)


@dataclass(frozen=True)
class SecantVerdict:
    status: Status
    expected_dim_cycle: int
    expected_dim_family: int
    witnesses: List[Tuple[str, bool]] = field(default_factory=list)

    def witness(self, name: str) -> bool:
        return dict(self.witnesses)[name]


def expected_cycle_dim(p: SecantProblem) -> int:
    return p.e - p.codim


def family_dim_bound(p: SecantProblem) -> int:
    """Upper bound on dim{l in G^r_d(C) : V_e^{e-f}(l) nonempty}."""
    return p.rho - p.codim + p.e


def _witnesses(p: SecantProblem) -> List[Tuple[str, bool]]:
    g, d, r, e, f = p.g, p.d, p.r, p.e, p.f
    bound = family_dim_bound(p)
    return [
        ("family-bound-nonnegative", bound >= 0),
        ("residual-rho-nonnegative", rho_value(g, p.sub_r, d - e) >= 0),
        ("codim-at-least-e", p.codim >= e),
        ("e-at-most-g", e <= g),
        ("d-at-least-2e-f-1", d >= 2 * e - f - 1),
        ("special-g-d-r-nonnegative", g - d + r >= 0),
        ("(i) 2f<=e-1", 2 * f <= e - 1),
        ("(ii) e=2r-2,f=r-1", e == 2 * r - 2 and f == r - 1),
        ("(iii) e<2(r+1-e+f)", e < 2 * (r + 1 - e + f)),
        ("(iv) rho>=codim-(g-d+r)", p.rho >= p.codim - (g - d + r)),
        ("prior-work-existence-range", e >= p.codim),
        ("theorem-6-range", _castelnuovo_range(p)),
    ]


def _castelnuovo_range(p: SecantProblem) -> bool:
    # (2r-2)-secant (r-2)-planes: finitely many, counted by C(d, g, r) > 0
    r = p.r
    return (
        r >= 3
        and p.e == 2 * r - 2
        and p.f == r - 1
        and p.d >= 3 * r - 2
        and p.rho >= 0
        and rho_value(p.g, 1, p.d - 2 * r + 2) >= 0
    )


_BASE = (
    "codim-at-least-e",
    "e-at-most-g",
    "d-at-least-2e-f-1",
    "special-g-d-r-nonnegative",
    "family-bound-nonnegative",
    "residual-rho-nonnegative",
)
_CASES = (
    "(i) 2f<=e-1",
    "(ii) e=2r-2,f=r-1",
    "(iii) e<2(r+1-e+f)",
    "(iv) rho>=codim-(g-d+r)",
)


def secant_verdict(p: SecantProblem) -> SecantVerdict:
    """Classify V_e^{e-f} on a general curve.

    EMPTY_GENERAL_CURVE when the family bound is negative or the residual
    series g^{r-e+f}_{d-e} cannot exist; EXISTS_EXPECTED_DIM when all the
    existence hypotheses and at least one of the cases (i)-(iv) hold, or
    when (e, f) = (2r-2, r-1) lies in the range where the Castelnuovo count
    is enumerative;
    HYPOTHESES_FAIL when a base existence hypothesis fails; UNKNOWN when the
    base hypotheses hold but none of (i)-(iv) does.
    """
    w = _witnesses(p)
    flags = dict(w)
    if not flags["family-bound-nonnegative"] or not flags["residual-rho-nonnegative"]:
        status = Status.EMPTY_GENERAL_CURVE
    elif flags["theorem-6-range"]:
        status = Status.EXISTS_EXPECTED_DIM
    elif not all(flags[k] for k in _BASE):
        status = Status.HYPOTHESES_FAIL
    elif any(flags[k] for k in _CASES):
        status = Status.EXISTS_EXPECTED_DIM
    else:
        status = Status.UNKNOWN
    return SecantVerdict(status, expected_cycle_dim(p), family_dim_bound(p), w)


def rho_zero_emptiness(p: SecantProblem) -> bool:
    """True when rho = 0 and e < f(r+1-e+f): no g^r_d has such secants."""
    return p.rho == 0 and p.e < p.codim


def coppens_martens_dim(p: SecantProblem) -> Union[int, str]:
    dim = expected_cycle_dim(p)
    return dim if dim >= 0 else EMPTY_EXPECTED


def very_ample_guaranteed(g: int, r: int, d: int, e: int) -> bool:
    """Every g^r_d on a general curve is (e-1)-very ample when rho + 2e - 2 - r < 0."""
    if e < 1:
        raise ValueError(f"e must be >= 1, got {e}")
    return rho_value(g, r, d) + 2 * e - 2 - r < 0


def uf_secant_problem(g: int, d: int, u: int, f: int) -> SecantProblem:
    """The case e = f(r+1-e+f): r = (u-1)(f+1), e = uf."""
    if u < 1 or f < 2:
        raise ValueError(f"need u >= 1 and f >= 2, got u={u}, f={f}")
    if u * f <= f:
        raise ValueError(f"uf = {u * f} must exceed f = {f}")
    return SecantProblem(g=g, d=d, r=(u - 1) * (f + 1), e=u * f, f=f)
