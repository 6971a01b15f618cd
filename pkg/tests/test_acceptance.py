"""Exit criteria, run at their stated ranges with exact equality."""

from detvar import acceptance as acc

MAX_N = 8
RESULTS = []


def check(number, name, fn):
    ok, detail = fn(MAX_N)
    RESULTS.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number} {name}: {detail}")
    assert ok, detail


def test_c01_quadric_oracle():
    check(1, "quadric oracle", acc.quadric_oracle)


def test_c02_euler_cross_check():
    check(2, "Euler cross-check n=2..8", acc.euler_cross_check)


def test_c03_psu_structure():
    check(3, "PSU palindromic/degree/value n=2..20", acc.psu_structure)


def test_c04_lower_degree_pattern():
    check(4, "lower-degree pattern n=2..8", acc.lower_degree_pattern)


def test_c05_shape():
    check(5, "shape n=2..8", acc.shape)


def test_c06a_point_count_n2():
    check("6a", "projective count n=2", acc.point_count_n2)


def test_c06b_point_count_exact_division():
    check("6b", "exact division n=2..8", acc.point_count_division)


def test_c06c_point_count_nonnegative():
    check("6c", "nonnegative count coefficients n=2..8", acc.point_count_nonnegative)


def test_c07_literal_corollary():
    check(7, "literal corollary n=2", acc.literal_corollary)


def test_c08_unimodality():
    check(8, "unimodality conventions", acc.unimodality)


def test_c09_solver_soundness():
    check(9, "solver soundness (200 random sequences)", acc.solver_soundness)


def test_c10_kunneth():
    check(10, "Kunneth a,b<=5", acc.kunneth)

