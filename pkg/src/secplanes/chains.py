"""Limit linear series on a chain of elliptic curves, and the Schubert-index
bookkeeping behind the secant-plane existence construction.

On a chain E_0 u ... u E_{g-1} with non-torsion node differences, a refined
limit g^r_d in the rigid (adjusted rho = 0) regime is a walk of vanishing
sequences: crossing one elliptic component raises every entry by one except
a single stationary entry. Counting such walks counts the limit series.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from .errors import PreconditionError, StepError
from .secant import SecantProblem
from .series import (
    SchubertIndex,
    SeriesParams,
    VanishingSequence,
    rho_value,
    to_vanishing,
)

COLLISION = "COLLISION"
OVERFLOW = "OVERFLOW"
NOT_RHO_ZERO = "NOT_RHO_ZERO"


@dataclass(frozen=True)
class ChainSpec:
    length: int
    r: int
    d: int
    start: Optional[SchubertIndex] = None
    end: Optional[SchubertIndex] = None

    def __post_init__(self):
        if self.length < 1:
            raise ValueError(f"chain length must be >= 1, got {self.length}")
        if self.r < 0:
            raise ValueError(f"r must be >= 0, got {self.r}")
        for name in ("start", "end"):
            idx = getattr(self, name)
            if idx is None:
                object.__setattr__(self, name, SchubertIndex.zero(self.r, self.d))
            elif not isinstance(idx, SchubertIndex):
                object.__setattr__(self, name, SchubertIndex(idx, self.r, self.d))
            elif (idx.r, idx.d) != (self.r, self.d):
                raise ValueError(f"{name} index has type ({idx.r}, {idx.d}), chain is ({self.r}, {self.d})")

    @property
    def series(self) -> SeriesParams:
        return SeriesParams(self.length, self.r, self.d)

    @property
    def adjusted_rho(self) -> int:
        return rho_value(self.length, self.r, self.d) - self.start.total() - self.end.total()


@dataclass(frozen=True)
class ChainPath:
    sequences: Tuple[VanishingSequence, ...]
    stationary_indices: Tuple[int, ...]


@dataclass(frozen=True)
class ChainEnumeration:
    paths: List[ChainPath]
    truncated: bool


def _step(entries: Tuple[int, ...], stay: int, d: int) -> Tuple[int, ...]:
    out = tuple(x if j == stay else x + 1 for j, x in enumerate(entries))
    if stay > 0 and out[stay - 1] >= out[stay]:
        raise StepError(f"keeping entry {stay} of {entries} fixed collides with entry {stay - 1}", COLLISION)
    if out[-1] > d:
        raise StepError(f"raising {entries} exceeds degree {d}", OVERFLOW)
    return out


def propagate_step(a: VanishingSequence, stay: int) -> VanishingSequence:
    """Cross one elliptic component: raise every entry except ``a[stay]``."""
    if not 0 <= stay <= a.r:
        raise ValueError(f"stationary index must be in [0, {a.r}], got {stay}")
    return VanishingSequence(_step(a.entries, stay, a.d), a.r, a.d)


def _end_ok(entries: Tuple[int, ...], end: Tuple[int, ...], d: int) -> bool:
    r = len(entries) - 1
    return all(d - entries[r - j] - j >= end[j] for j in range(r + 1))


def _require_rho_zero(spec: ChainSpec):
    if spec.adjusted_rho != 0:
        raise PreconditionError(
            f"chain counting needs rho(g, r, d) - |start| - |end| = 0, got {spec.adjusted_rho}",
            NOT_RHO_ZERO,
        )


def _counter(spec: ChainSpec):
    d, r, g = spec.d, spec.r, spec.length
    end = spec.end.entries

    @lru_cache(maxsize=None)
    def count(pos: int, entries: Tuple[int, ...]) -> int:
        if pos == g:
            return 1 if _end_ok(entries, end, d) else 0
        total = 0
        for stay in range(r + 1):
            try:
                nxt = _step(entries, stay, d)
            except StepError:
                continue
            total += count(pos + 1, nxt)
        return total

    return count


def count_chain_series(spec: ChainSpec) -> int:
    """Number of refined limit g^r_d on the chain with the prescribed
    ramification at both ends, in the adjusted-rho-zero regime."""
    _require_rho_zero(spec)
    start = to_vanishing(spec.start).entries
    return _counter(spec)(0, start)


def enumerate_chain_series(spec: ChainSpec, limit: Optional[int] = None) -> ChainEnumeration:
    """Explicit walks in lexicographic order of their stationary-index words."""
    _require_rho_zero(spec)
    if limit is not None and limit < 0:
        raise ValueError("limit must be non-negative")
    count = _counter(spec)
    d, r, g = spec.d, spec.r, spec.length
    paths: List[ChainPath] = []
    truncated = False

    def walk(pos, seqs, word):
        nonlocal truncated
        if truncated:
            return
        if pos == g:
            if limit is not None and len(paths) >= limit:
                truncated = True
                return
            paths.append(ChainPath(
                tuple(VanishingSequence(s, r, d) for s in seqs),
                tuple(word),
            ))
            return
        for stay in range(r + 1):
            try:
                nxt = _step(seqs[-1], stay, d)
            except StepError:
                continue
            if count(pos + 1, nxt):
                walk(pos + 1, seqs + [nxt], word + [stay])

    walk(0, [to_vanishing(spec.start).entries], [])
    return ChainEnumeration(paths, truncated)


@dataclass(frozen=True)
class SecantConstruction:
    problem: SecantProblem
    alpha: SchubertIndex
    beta: SchubertIndex
    merged: VanishingSequence
    gamma: SchubertIndex


def _balanced(total: int, parts: int) -> List[int]:
    # weakly increasing, entries differ by at most one, summing to total
    q, c = divmod(total, parts)
    return [q] * (parts - c) + [q + 1] * c


def alpha_index(p: SecantProblem) -> SchubertIndex:
    """Balanced index of type (r-e+f, d-e) with total rho(e, r-e+f, d-e)."""
    rp = p.sub_r
    total = rho_value(p.e, rp, p.d - p.e)
    if total < 0:
        raise PreconditionError(f"rho(e, r-e+f, d-e) = {total} < 0")
    return SchubertIndex(_balanced(total, rp + 1), rp, p.d - p.e)


def beta_index(p: SecantProblem) -> SchubertIndex:
    """Balanced index of type (e-f-1, 2e-f-1) with total e."""
    e, f = p.e, p.f
    return SchubertIndex(_balanced(e, e - f), e - f - 1, 2 * e - f - 1)


def separation_condition(p: SecantProblem) -> bool:
    """alpha_{r-e+f} + (r-e+f) < d - 2e + f + 1.

    Equivalent to f(r+1-e+f) >= e whenever the alpha index exists.
    """
    alpha = alpha_index(p)
    return alpha[-1] + p.sub_r < p.d - 2 * p.e + p.f + 1


@lru_cache(maxsize=1 << 16)
def _construction_data(d: int, r: int, e: int, f: int):
    # independent of the genus, so grids over g reuse it
    p = SecantProblem(g=0, d=d, r=r, e=e, f=f)
    alpha = alpha_index(p)
    beta = beta_index(p)
    shift = d - 2 * e + f + 1
    merged = VanishingSequence(
        [a + j for j, a in enumerate(alpha)] + [b + shift + j for j, b in enumerate(beta)],
        r,
        d,
    )
    gamma = SchubertIndex(
        [e - b for b in reversed(beta.entries)] + [d - r - a for a in reversed(alpha.entries)],
        r,
        d,
    )
    return alpha, beta, merged, gamma


def build_secant_construction(p: SecantProblem) -> SecantConstruction:
    """Ramification data of the limit g^r_d on Y u_p Z carrying the secant.

    ``merged`` is the vanishing sequence at p of the aspect on the genus-e
    component Y (alpha part from W_A, beta part shifted by d-2e+f+1 from
    W_L); ``gamma`` is the complementary ramification the genus g-e
    component Z must carry.
    """
    e, f, d = p.e, p.f, p.d
    if p.codim < e:
        raise PreconditionError(f"f(r+1-e+f) = {p.codim} < e = {e}")
    if d < 2 * e - f - 1:
        raise PreconditionError(f"d = {d} < 2e-f-1 = {2 * e - f - 1}")
    return SecantConstruction(p, *_construction_data(d, p.r, e, f))


def gamma_dimension_identity(p: SecantProblem) -> bool:
    """rho(g-e, r, d, gamma) == rho(g, r, d) + e - f(r+1-e+f)."""
    c = build_secant_construction(p)
    lhs = rho_value(p.g - p.e, p.r, p.d) - c.gamma.total()
    return lhs == p.rho + p.e - p.codim


def assumption_degree_checks(p: SecantProblem) -> dict:
    e, f, d = p.e, p.f, p.d
    # deg L + deg A^dual + (d+f-2e): L is a g_{2e-f-1}, A a g_{d-e}
    deg2 = (2 * e - f - 1) - (d - e) + (d + f - 2 * e)
    if deg2 != e - 1:
        raise AssertionError(f"degree bookkeeping broke: {deg2} != {e - 1}")
    deg3 = (d - 1) - (d - e)
    if deg3 != e - 1:
        raise AssertionError(f"degree bookkeeping broke: {deg3} != {e - 1}")
    gdr = p.g - p.d + p.r
    return {
        "assumption2_degree": deg2,
        "assumption3_degree": deg3,
        "genus_Y_minus_1": e - 1,
        "ass4_holds": p.rho >= p.codim - gdr,
        "gdr_ge_e": gdr >= e,
    }
