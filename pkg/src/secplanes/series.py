"""Brill-Noether numbers, Schubert indices and vanishing sequences.

Schubert indices and vanishing sequences carry their type ``(r, d)`` so
that mixing, say, an index of type ``(r - e + f, d - e)`` with one of type
``(r, d)`` fails immediately.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence, Union

EMPTY = "empty"


def rho_value(g: int, r: int, d: int) -> int:
    """g - (r+1)(g-d+r) as bare integer algebra, no validation."""
    return g - (r + 1) * (g - d + r)


@dataclass(frozen=True)
class SeriesParams:
    g: int
    r: int
    d: int

    def __post_init__(self):
        if self.g < 0:
            raise ValueError(f"genus must be >= 0, got {self.g}")
        if self.r < 0:
            raise ValueError(f"r must be >= 0, got {self.r}")


def _as_tuple(entries) -> tuple:
    out = tuple(int(x) for x in entries)
    return out


@dataclass(frozen=True)
class SchubertIndex:
    """Weakly increasing 0 <= alpha_0 <= ... <= alpha_r <= d - r."""

    entries: tuple
    r: int
    d: int

    def __init__(self, entries: Sequence[int], r: int, d: int):
        object.__setattr__(self, "entries", _as_tuple(entries))
        object.__setattr__(self, "r", int(r))
        object.__setattr__(self, "d", int(d))
        self._check()

    def _check(self):
        e, r, d = self.entries, self.r, self.d
        if r < 0:
            raise ValueError(f"r must be >= 0, got {r}")
        if len(e) != r + 1:
            raise ValueError(f"Schubert index of type ({r}, {d}) needs {r + 1} entries, got {len(e)}")
        if e[0] < 0 or e[-1] > d - r:
            raise ValueError(f"entries of {e} must lie in [0, {d - r}]")
        if any(x > y for x, y in zip(e, e[1:])):
            raise ValueError(f"Schubert index {e} is not weakly increasing")

    @classmethod
    def zero(cls, r: int, d: int) -> "SchubertIndex":
        return cls((0,) * (r + 1), r, d)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def total(self) -> int:
        return sum(self.entries)


@dataclass(frozen=True)
class VanishingSequence:
    """Strictly increasing vanishing orders 0 <= a_0 < ... < a_r <= d."""

    entries: tuple
    r: int
    d: int

    def __init__(self, entries: Sequence[int], r: int, d: int):
        object.__setattr__(self, "entries", _as_tuple(entries))
        object.__setattr__(self, "r", int(r))
        object.__setattr__(self, "d", int(d))
        e = self.entries
        if self.r < 0:
            raise ValueError(f"r must be >= 0, got {self.r}")
        if len(e) != self.r + 1:
            raise ValueError(f"vanishing sequence of type ({r}, {d}) needs {r + 1} entries, got {len(e)}")
        if e[0] < 0 or e[-1] > self.d:
            raise ValueError(f"entries of {e} must lie in [0, {d}]")
        if any(x >= y for x, y in zip(e, e[1:])):
            raise ValueError(f"vanishing sequence {e} is not strictly increasing")

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def complement(self) -> "VanishingSequence":
        """(d - a_r, ..., d - a_0): the sequence seen from the other end of a node."""
        return VanishingSequence([self.d - x for x in reversed(self.entries)], self.r, self.d)


def rho(p: SeriesParams) -> int:
    return rho_value(p.g, p.r, p.d)


def _check_context(p: SeriesParams, alpha: SchubertIndex):
    if (alpha.r, alpha.d) != (p.r, p.d):
        raise ValueError(
            f"Schubert index has type ({alpha.r}, {alpha.d}) but series is ({p.r}, {p.d})"
        )


def rho_ramified(p: SeriesParams, alpha: SchubertIndex) -> int:
    """Adjusted Brill-Noether number rho(g, r, d) - sum(alpha)."""
    _check_context(p, alpha)
    return rho(p) - alpha.total()


def to_vanishing(alpha: SchubertIndex) -> VanishingSequence:
    return VanishingSequence([a + i for i, a in enumerate(alpha)], alpha.r, alpha.d)


def to_schubert(a: VanishingSequence) -> SchubertIndex:
    return SchubertIndex([x - i for i, x in enumerate(a)], a.r, a.d)


def weight(a: VanishingSequence) -> int:
    return sum(x - i for i, x in enumerate(a))


def eh_exists(genus: int, p: SeriesParams, alpha: SchubertIndex) -> bool:
    """Existence criterion for a g^r_d with ramification >= alpha at a
    general point of a general pointed curve of the given genus:

        sum_i max(alpha_i + genus - d + r, 0) <= genus
    """
    _check_context(p, alpha)
    if genus < 0:
        raise ValueError(f"genus must be >= 0, got {genus}")
    excess = sum(max(a + genus - p.d + p.r, 0) for a in alpha)
    return excess <= genus


def eh_dimension(genus: int, p: SeriesParams, alpha: SchubertIndex) -> Union[int, str]:
    """Dimension of G^r_d(C, p, alpha) on a general pointed curve, or EMPTY."""
    if not eh_exists(genus, p, alpha):
        return EMPTY
    return rho_ramified(SeriesParams(genus, p.r, p.d), alpha)
