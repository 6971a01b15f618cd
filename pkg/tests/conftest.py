import itertools

from hypothesis import strategies as st

from detvar.poly import Polynomial


def subset_sum_counts(parts):
    """Coefficients of prod (1 + t^p) by enumerating subsets."""
    counts = {}
    for r in range(len(parts) + 1):
        for combo in itertools.combinations(parts, r):
            counts[sum(combo)] = counts.get(sum(combo), 0) + 1
    return counts


small_ints = st.integers(min_value=-20, max_value=20)
polynomials = st.lists(small_ints, max_size=7).map(Polynomial)
nonneg_polynomials = st.lists(st.integers(min_value=0, max_value=9), max_size=10).map(Polynomial)
nonzero_polynomials = polynomials.filter(lambda p: not p.is_zero())


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
