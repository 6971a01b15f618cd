"""Graded rank data and symbolic homology descriptors."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Union

from detvar.poly import Polynomial


@dataclass(frozen=True)
class GradedRanks:
    """Free ranks by degree, supported in ``[0, max_degree]``."""

    ranks: Mapping[int, int]
    max_degree: int

    def __post_init__(self):
        clean = {}
        for k, r in sorted(self.ranks.items()):
            if k < 0 or k > self.max_degree:
                raise ValueError(f"degree {k} outside [0, {self.max_degree}]")
            if r < 0:
                raise ValueError(f"negative rank {r} at degree {k}")
            if r:
                clean[k] = r
        object.__setattr__(self, "ranks", clean)

    def __getitem__(self, k: int) -> int:
        return self.ranks.get(k, 0)

    def total(self) -> int:
        return sum(self.ranks.values())

    @classmethod
    def from_polynomial(cls, p: Polynomial, max_degree: int | None = None) -> GradedRanks:
        top = p.degree if max_degree is None else max_degree
        return cls(p.to_dict(), 0 if top is None else top)


def poincare_from_ranks(g: GradedRanks) -> Polynomial:
    return Polynomial(dict(g.ranks))


def euler_characteristic(g: GradedRanks) -> int:
    return sum(-r if k % 2 else r for k, r in g.ranks.items())


@dataclass(frozen=True, order=True)
class TorsionSymbol:
    """Opaque stand-in for the (unresolved) torsion of ``H_degree(PSU_n)``."""

    family: str
    n: int
    degree: int

    def __post_init__(self):
        if not 0 <= self.degree <= self.n * self.n - 1:
            raise ValueError(f"degree {self.degree} outside [0, {self.n * self.n - 1}] for {self.family}_{self.n}")

    def __str__(self) -> str:
        return f"tors H_{self.degree}({self.family}_{self.n})"


@dataclass(frozen=True)
class Free:
    rank: int

    def __str__(self) -> str:
        return "0" if self.rank == 0 else ("Z" if self.rank == 1 else f"Z^{self.rank}")


@dataclass(frozen=True)
class FreePlusTorsion:
    rank: int
    torsion: tuple[TorsionSymbol, ...] = ()

    def __str__(self) -> str:
        parts = [] if self.rank == 0 else [str(Free(self.rank))]
        parts += [f"[{t}]" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class Extension:
    """A group ``E`` with ``sub`` as a subgroup and ``E / sub`` free of rank ``quotient_rank``."""

    quotient_rank: int
    sub: "Descriptor"

    def __post_init__(self):
        if self.quotient_rank != 1:
            raise ValueError("extension quotient must be Z (rank 1)")

    def __str__(self) -> str:
        return f"ext(Z by {self.sub})"


Descriptor = Union[Free, FreePlusTorsion, Extension]


def free_rank(d: Descriptor) -> int:
    """Rational rank; additive over the extension regardless of its class."""
    if isinstance(d, Extension):
        return d.quotient_rank + free_rank(d.sub)
    return d.rank


@dataclass(frozen=True)
class HomologyTable:
    entries: Mapping[int, Descriptor]
    diagnostics: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if any(k < 0 for k in self.entries):
            raise ValueError("negative degree in homology table")
        object.__setattr__(self, "entries", dict(sorted(self.entries.items())))
        object.__setattr__(self, "diagnostics", tuple(self.diagnostics))

    def free_ranks(self) -> GradedRanks:
        top = max(self.entries, default=0)
        return GradedRanks({k: free_rank(d) for k, d in self.entries.items()}, top)
