"""Homology bookkeeping for the projectivized determinantal hypersurface.

Computes the Poincare polynomial of ``Y = P({det = 0})`` inside ``P^{n^2-1}``
three ways (literal theorem table, literal corollary formula, exact-sequence
solver) and cross-checks them against point-count and quadric oracles.
"""

from detvar.poly import (
    Convention,
    NegativeCoefficient,
    NotDivisible,
    Polynomial,
    ZeroPolynomial,
    is_palindromic,
    is_unimodal,
    poly_add,
    poly_eval,
    poly_exact_div,
    poly_mul,
)
from detvar.spaces import (
    SpaceId,
    pgl_bm_ranks,
    projective_poincare,
    psu_poincare,
    quadric_surface_poincare,
)
from detvar.graded import (
    Extension,
    Free,
    FreePlusTorsion,
    GradedRanks,
    HomologyTable,
    TorsionSymbol,
    euler_characteristic,
    free_rank,
    poincare_from_ranks,
)
from detvar.les import (
    ExactSequenceSpec,
    Inconsistent,
    Known,
    MapHypothesis,
    SolvedSequence,
    SolverError,
    Underdetermined,
    Unknown,
    build_localization_system,
    solve_determinantal_ranks,
    solve_exact_sequence,
)
from detvar.variety import (
    ComparisonReport,
    DetVarietyContext,
    compare_modes,
    corollary_components,
    corollary_poincare,
    solved_poincare,
    theorem_homology_table,
)
from detvar.counting import (
    euler_via_count,
    gl_count,
    projective_det_count,
    singular_locus_count,
)

__version__ = "0.1.0"
