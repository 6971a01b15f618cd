import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from detvar.acceptance import random_sequence
from detvar.graded import euler_characteristic
from detvar.les import (
    ExactSequenceSpec,
    Inconsistent,
    Known,
    MapHypothesis,
    Underdetermined,
    Unknown,
    build_localization_system,
    solve_determinantal_ranks,
    solve_exact_sequence,
)

K, U = Known, Unknown


def seq(*terms, hyps=()):
    return ExactSequenceSpec((K(0),) + terms + (K(0),), hyps)


def brute_force(spec):
    """All unknown-term assignments reachable by some bounded map-rank vector."""
    known = [t.rank for t in spec.terms if isinstance(t, Known)]
    bound = max(known + [h.rank for h in spec.hypotheses] + [0]) + 1
    hyps = {h.arrow: h.rank for h in spec.hypotheses}
    L = spec.n_arrows
    found = set()
    for r in itertools.product(range(bound + 1), repeat=L):
        if any(r[a] != v for a, v in hyps.items()):
            continue
        ranks = [(r[i - 1] if i > 0 else 0) + (r[i] if i < L else 0) for i in range(L + 1)]
        if all(ranks[i] == t.rank for i, t in enumerate(spec.terms) if isinstance(t, Known)):
            found.add(tuple((t.id, ranks[i]) for i, t in enumerate(spec.terms) if isinstance(t, Unknown)))
    return found


def test_isomorphism_forced():
    assert solve_exact_sequence(seq(U("a"), K(1))).assignment == {"a": 1}


def test_short_exact_additivity():
    assert solve_exact_sequence(seq(K(1), U("b"), K(1))).assignment == {"b": 2}


def test_quadric_q1_sequence():
    solved = solve_exact_sequence(seq(K(1), U("c"), K(1), K(0), U("d")))
    assert solved.assignment == {"c": 2, "d": 0}


def test_unconstrained_middle_arrow():
    spec = seq(U("a"), K(1), K(1), U("b"))
    with pytest.raises(Underdetermined) as err:
        solve_exact_sequence(spec)
    (fp,) = err.value.free_parameters
    assert (fp.low, fp.high) == (0, 1)
    assert len(brute_force(spec)) == 2


def test_unbounded_arrow_between_unknowns():
    with pytest.raises(Underdetermined) as err:
        solve_exact_sequence(seq(U("a"), U("b")))
    assert err.value.free_parameters[0].high is None


def test_inconsistent():
    with pytest.raises(Inconsistent):
        solve_exact_sequence(seq(K(1)))
    with pytest.raises(Inconsistent):
        solve_exact_sequence(seq(K(1), U("a"), K(1), hyps=(MapHypothesis(1, 2),)))
    with pytest.raises(Inconsistent):
        solve_exact_sequence(seq(K(1), K(3)))


def test_spec_validation():
    with pytest.raises(ValueError):
        ExactSequenceSpec((K(0), K(0)))
    with pytest.raises(ValueError):
        ExactSequenceSpec((K(1), U("a"), K(0)))
    with pytest.raises(ValueError):
        ExactSequenceSpec((K(0), U("a"), U("a"), K(0)))
    with pytest.raises(ValueError):
        ExactSequenceSpec((K(0), U("a"), K(0)), (MapHypothesis(2, 0),))


terms_st = st.lists(st.one_of(st.integers(0, 3).map(K), st.just(None)), min_size=1, max_size=5)


@st.composite
def specs(draw):
    raw = draw(terms_st)
    terms = tuple(U(f"u{i}") if t is None else t for i, t in enumerate(raw, start=1))
    L = len(terms) + 1
    arrows = draw(st.lists(st.integers(0, L - 1), unique=True, max_size=2))
    hyps = tuple(MapHypothesis(a, draw(st.integers(0, 3))) for a in arrows)
    return ExactSequenceSpec((K(0),) + terms + (K(0),), hyps)


@settings(max_examples=300, deadline=None)
@given(specs())
def test_solver_matches_brute_force(spec):
    found = brute_force(spec)
    if not found:
        with pytest.raises(Inconsistent):
            solve_exact_sequence(spec)
    elif len(found) > 1:
        with pytest.raises(Underdetermined):
            solve_exact_sequence(spec)
    else:
        (only,) = found
        assert solve_exact_sequence(spec).assignment == dict(only)


@settings(max_examples=200)
@given(st.randoms(use_true_random=False))
def test_erase_and_recover(rng):
    maps, terms = random_sequence(rng)
    assert sum(-r if i % 2 else r for i, r in enumerate(terms)) == 0
    erased = {i for i in range(1, len(terms) - 1) if rng.random() < 0.5}
    spec = ExactSequenceSpec(
        tuple(U(f"x{i}") if i in erased else K(r) for i, r in enumerate(terms)),
        tuple(MapHypothesis(i, r) for i, r in enumerate(maps)),
    )
    solved = solve_exact_sequence(spec)
    assert solved.map_ranks == tuple(maps)
    assert solved.alternating_sum() == 0
    assert {f"x{i}": terms[i] for i in erased} == solved.assignment


@pytest.mark.parametrize("n", range(2, 7))
def test_localization_solutions_are_idempotent(n):
    for spec in build_localization_system(n):
        solved = solve_exact_sequence(spec)
        assert solved.alternating_sum() == 0
        again = solve_exact_sequence(spec.substitute(solved.assignment))
        assert again.term_ranks == solved.term_ranks
        assert again.map_ranks == solved.map_ranks


def test_localization_n2_q1_matches_hand_sequence():
    spec = build_localization_system(2)[0]
    assert spec.terms == (K(0), K(1), U("H_2(Y)"), K(1), K(0), U("H_1(Y)"), K(0))
    assert spec.hypotheses == (MapHypothesis(3, 0),)


def test_localization_n2_q3_fully_forced():
    spec = build_localization_system(2)[2]
    assert spec.terms == (K(0), K(0), K(0), K(1), K(1), K(0), K(0))
    assert spec.hypotheses == ()


@pytest.mark.parametrize("n", range(2, 9))
def test_localization_system_size_and_hypothesis_range(n):
    specs_ = build_localization_system(n)
    assert len(specs_) == n * n - 1
    with_hyp = [q for q, s in enumerate(specs_, start=1) if s.hypotheses]
    assert with_hyp == list(range(1, n * n - 2))


def test_solved_ranks_small_n():
    assert solve_determinantal_ranks(2).ranks == {0: 1, 2: 2, 4: 1}
    g3 = solve_determinantal_ranks(3)
    assert g3.ranks == {0: 1, 2: 1, 4: 1, 6: 1, 7: 1, 8: 1, 10: 2, 12: 2, 14: 1}
    assert euler_characteristic(g3) == 9


@pytest.mark.parametrize("n", range(2, 9))
def test_lower_degrees(n):
    g = solve_determinantal_ranks(n)
    assert g[0] == 1
    for k in range(n * n - 2):
        assert g[k] == (0 if k % 2 else 1)


@pytest.mark.parametrize("n", range(3, 7))
def test_without_zero_map_hypothesis_system_is_open(n):
    """The Chow-theoretic input is what closes the system; dropping it leaves freedom."""
    spec = next(s for s in build_localization_system(n) if s.hypotheses and s.terms[4].rank)
    bare = ExactSequenceSpec(spec.terms, (), spec.note)
    with pytest.raises(Underdetermined):
        solve_exact_sequence(bare)
