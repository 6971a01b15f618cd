"""Three computations of the Poincare polynomial of ``Y`` and their comparison.

* ``theorem``: the closed-form case split on ``H_k(Y)``, read literally;
* ``corollary``: ``A(t) + B~(t)``, read literally;
* ``solved``: the localization system re-solved by :mod:`detvar.les`.

The literal modes keep their boundary behaviour (no dimension truncation);
only the solver knows that ``H_k(Y) = 0`` above ``2 dim Y``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from detvar.counting import euler_via_count, projective_det_count
from detvar.graded import (
    Descriptor,
    Extension,
    Free,
    FreePlusTorsion,
    HomologyTable,
    TorsionSymbol,
    free_rank,
    poincare_from_ranks,
)
from detvar.les import solve_determinantal_ranks
from detvar.poly import Polynomial, poly_eval
from detvar.spaces import psu_poincare, quadric_surface_poincare

MODES = ("theorem", "corollary", "solved", "oracle")


@dataclass(frozen=True)
class DetVarietyContext:
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")

    @property
    def matrix_dim(self) -> int:
        return self.n * self.n

    @property
    def ambient_dim(self) -> int:
        """Complex dimension of ``X = P(Mat_n)``; also the shift ``s``."""
        return self.n * self.n - 1

    @property
    def dim(self) -> int:
        return self.n * self.n - 2

    @property
    def real_dim(self) -> int:
        return 2 * self.dim


def _psu_descriptor(n: int, d: int) -> Descriptor:
    """``H_d(PSU_n)``: free part from the Betti numbers, torsion left symbolic."""
    if d < 0 or d > n * n - 1:
        return Free(0)
    return FreePlusTorsion(psu_poincare(n).coeff(d), (TorsionSymbol("PSU", n, d),))


def _theorem_entry(n: int, k: int) -> Descriptor:
    s = n * n - 1
    if k < s:
        return Free(0 if k % 2 else 1)
    sub = _psu_descriptor(n, k + 1 - s)
    if k % 2:
        return sub
    return Extension(1, sub)


def theorem_homology_table(n: int) -> HomologyTable:
    ctx = DetVarietyContext(n)
    entries = {k: _theorem_entry(n, k) for k in range(ctx.real_dim + 1)}
    diagnostics = []
    # the literal case split does not stop at the real dimension; scan up to that of X
    for k in range(ctx.real_dim + 1, 2 * ctx.ambient_dim + 1):
        d = _theorem_entry(n, k)
        if free_rank(d) or isinstance(d, FreePlusTorsion) and d.torsion:
            diagnostics.append(f"degree {k} > 2 dim Y = {ctx.real_dim}: literal value {d} dropped")
    if diagnostics:
        diagnostics.append(
            f"every even degree >= {ctx.ambient_dim} literally has a Z quotient, without bound"
        )
    return HomologyTable(entries, tuple(diagnostics))


def corollary_components(n: int) -> tuple[Polynomial, Polynomial, Polynomial]:
    s = DetVarietyContext(n).ambient_dim
    a = Polynomial({2 * j: 1 for j in range(s // 2 + 1)})
    b = psu_poincare(n).shift(s)
    # +1 only on odd-degree terms actually present in B
    btilde = Polynomial({i: c + 1 if i % 2 else c for i, c in b.terms()})
    return a, b, btilde


def corollary_poincare(n: int) -> Polynomial:
    a, _, btilde = corollary_components(n)
    return a + btilde


def solved_poincare(n: int) -> Polynomial:
    return poincare_from_ranks(solve_determinantal_ranks(n))


@dataclass(frozen=True)
class ComparisonRow:
    degree: int
    theorem: int | None
    corollary: int
    solved: int
    oracle: int | None

    def values(self) -> dict[str, int]:
        vals = {m: getattr(self, m) for m in MODES}
        return {m: v for m, v in vals.items() if v is not None}

    def agrees(self) -> bool:
        return len(set(self.values().values())) <= 1


@dataclass(frozen=True)
class Discrepancy:
    degree: int
    values: dict[str, int]

    @property
    def modes(self) -> tuple[str, ...]:
        """Modes whose value differs from the solved one."""
        ref = self.values["solved"]
        return tuple(m for m, v in self.values.items() if v != ref)


@dataclass(frozen=True)
class ComparisonReport:
    n: int
    rows: tuple[ComparisonRow, ...]
    discrepancies: tuple[Discrepancy, ...]
    euler_solved: int
    euler_count: int
    verdicts: dict[str, bool] = field(default_factory=dict)

    def discrepant_degrees(self) -> list[int]:
        return [d.degree for d in self.discrepancies]


def compare_modes(n: int) -> ComparisonReport:
    """Degreewise table of all modes; disagreement is recorded, never raised."""
    table = theorem_homology_table(n)
    cor = corollary_poincare(n)
    sol = solved_poincare(n)
    oracle = quadric_surface_poincare() if n == 2 else None
    top = max(cor.degree, sol.degree, max(table.entries))
    rows = []
    for k in range(top + 1):
        rows.append(
            ComparisonRow(
                degree=k,
                theorem=free_rank(table.entries[k]) if k in table.entries else None,
                corollary=cor.coeff(k),
                solved=sol.coeff(k),
                oracle=oracle.coeff(k) if oracle is not None else None,
            )
        )
    discrepancies = tuple(Discrepancy(r.degree, r.values()) for r in rows if not r.agrees())
    chi_solved = int(poly_eval(sol, -1))
    chi_count = euler_via_count(n)
    verdicts = {
        "euler": chi_solved == chi_count == n * n,
        "corollary_matches_solved": cor == sol,
        "theorem_matches_solved": all(r.theorem == r.solved for r in rows if r.theorem is not None),
        "count_nonnegative": all(c >= 0 for _, c in projective_det_count(n).terms()),
    }
    if oracle is not None:
        verdicts["oracle_matches_solved"] = oracle == sol
    return ComparisonReport(n, tuple(rows), discrepancies, chi_solved, chi_count, verdicts)
