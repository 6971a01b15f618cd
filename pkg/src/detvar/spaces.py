"""Poincare polynomials and Borel-Moore rank profiles of the classical spaces involved."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from detvar.graded import GradedRanks
from detvar.poly import Polynomial


@dataclass(frozen=True)
class SpaceId:
    kind: str  # "projective" | "psu" | "pgl" | "quadric"
    param: int | None = None

    def __post_init__(self):
        if self.kind == "projective":
            if self.param is None or self.param < 0:
                raise ValueError("projective space needs m >= 0")
        elif self.kind in ("psu", "pgl"):
            if self.param is None or self.param < 2:
                raise ValueError(f"{self.kind} needs n >= 2")
        elif self.kind == "quadric":
            if self.param is not None:
                raise ValueError("the quadric surface takes no parameter")
        else:
            raise ValueError(f"unknown space kind {self.kind!r}")

    def poincare(self) -> Polynomial:
        if self.kind == "projective":
            return projective_poincare(self.param)
        if self.kind == "psu":
            return psu_poincare(self.param)
        if self.kind == "quadric":
            return quadric_surface_poincare()
        # PGL_n deformation-retracts onto PSU_n
        return psu_poincare(self.param)


def projective_poincare(m: int) -> Polynomial:
    if m < 0:
        raise ValueError("m must be nonnegative")
    return Polynomial({2 * i: 1 for i in range(m + 1)})


@lru_cache(maxsize=None)
def psu_poincare(n: int) -> Polynomial:
    """Expanded product of ``(1 + t^(2i+1))`` for ``i = 1..n-1``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    p = Polynomial.constant(1)
    for i in range(1, n):
        p = p * Polynomial({0: 1, 2 * i + 1: 1})
    return p


def pgl_bm_ranks(n: int) -> GradedRanks:
    """Borel-Moore ranks of ``PGL_n``.

    ``PGL_n`` is an oriented manifold of real dimension ``2(n^2-1)`` homotopic
    to ``PSU_n``; combining duality on both sides turns into a plain shift by
    ``n^2 - 1`` of the Betti numbers of ``PSU_n``.
    """
    s = n * n - 1
    return GradedRanks(psu_poincare(n).shift(s).to_dict(), 2 * s)


def quadric_surface_poincare() -> Polynomial:
    return projective_poincare(1) * projective_poincare(1)
