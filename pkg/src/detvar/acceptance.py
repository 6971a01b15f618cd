"""Acceptance checks, shared by ``detvar verify`` and ``tests/test_acceptance.py``.

Every check is exact (tolerance zero). Each returns ``(passed, detail)``.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

from detvar.counting import euler_via_count, projective_det_count
from detvar.les import (
    ExactSequenceSpec,
    Known,
    MapHypothesis,
    Underdetermined,
    Unknown,
    solve_exact_sequence,
)
from detvar.poly import Convention, Polynomial, NotDivisible, is_palindromic, is_unimodal, poly_eval, poly_mul
from detvar.spaces import projective_poincare, psu_poincare
from detvar.variety import compare_modes, corollary_components, corollary_poincare, solved_poincare

PSU_MAX_N = 20
SOLVER_TRIALS = 200
KUNNETH_MAX = 5


@dataclass(frozen=True)
class Criterion:
    number: int
    name: str
    check: Callable[[int], tuple[bool, str]]


def quadric_oracle(max_n: int) -> tuple[bool, str]:
    start = time.perf_counter()
    p = solved_poincare(2)
    elapsed = time.perf_counter() - start
    ok = p == Polynomial({0: 1, 2: 2, 4: 1}) and elapsed < 1.0
    return ok, f"{p} in {elapsed:.3f}s"


def euler_cross_check(max_n: int) -> tuple[bool, str]:
    start = time.perf_counter()
    bad = []
    for n in range(2, max_n + 1):
        chi_solved = poly_eval(solved_poincare(n), -1)
        chi_count = euler_via_count(n)
        if not chi_solved == chi_count == n * n:
            bad.append((n, chi_solved, chi_count))
    elapsed = time.perf_counter() - start
    return not bad and elapsed < 10.0, f"mismatches {bad}, {elapsed:.3f}s"


def psu_structure(max_n: int) -> tuple[bool, str]:
    bad = []
    for n in range(2, max(max_n, PSU_MAX_N) + 1):
        p = psu_poincare(n)
        if not (is_palindromic(p) and poly_eval(p, 1) == 2 ** (n - 1) and p.degree == n * n - 1):
            bad.append(n)
    return not bad, f"failing n: {bad}"


def lower_degree_pattern(max_n: int) -> tuple[bool, str]:
    bad = []
    for n in range(2, max_n + 1):
        p = solved_poincare(n)
        for k in range(n * n - 2):
            if p.coeff(k) != (0 if k % 2 else 1):
                bad.append((n, k, p.coeff(k)))
    return not bad, f"violations {bad}"


def shape(max_n: int) -> tuple[bool, str]:
    bad = []
    for n in range(2, max_n + 1):
        p = solved_poincare(n)
        if not (p.degree == 2 * (n * n - 2) and p.coeff(0) == 1 and p.leading_coeff == 1):
            bad.append(n)
    return not bad, f"failing n: {bad}"


def point_count_n2(max_n: int) -> tuple[bool, str]:
    p = projective_det_count(2)
    return p == Polynomial([1, 2, 1]), p.format("q")


def point_count_division(max_n: int) -> tuple[bool, str]:
    bad = []
    for n in range(2, max_n + 1):
        try:
            projective_det_count(n)
        except NotDivisible as exc:
            bad.append((n, str(exc)))
    return not bad, f"failures {bad}"


def point_count_nonnegative(max_n: int) -> tuple[bool, str]:
    bad = {}
    for n in range(2, max_n + 1):
        neg = {k: c for k, c in projective_det_count(n).terms() if c < 0}
        if neg:
            bad[n] = neg
    return not bad, f"negative coefficients (n: {{degree: coeff}}) {bad}"


def point_counting(max_n: int) -> tuple[bool, str]:
    parts = [point_count_n2(max_n), point_count_division(max_n), point_count_nonnegative(max_n)]
    return all(ok for ok, _ in parts), "; ".join(d for _, d in parts)


def literal_corollary(max_n: int) -> tuple[bool, str]:
    comps = corollary_components(2)
    expected = (Polynomial({0: 1, 2: 1}), Polynomial({3: 1, 6: 1}), Polynomial({3: 2, 6: 1}))
    poly = corollary_poincare(2)
    degrees = compare_modes(2).discrepant_degrees()
    ok = comps == expected and poly == Polynomial({0: 1, 2: 1, 3: 2, 6: 1}) and degrees == [2, 3, 4, 6]
    return ok, f"components {tuple(map(str, comps))}, P = {poly}, discrepant degrees {degrees}"


def unimodality(max_n: int) -> tuple[bool, str]:
    four = is_unimodal(psu_poincare(4), Convention.NONZERO)
    six = is_unimodal(psu_poincare(6), Convention.NONZERO)
    all_fail = [n for n in range(2, max(max_n, 8) + 1) if is_unimodal(psu_poincare(n), Convention.ALL)]
    return four and not six and not all_fail, f"n=4 nonzero {four}, n=6 nonzero {six}, ALL-unimodal n: {all_fail}"


def random_sequence(rng: random.Random, max_len: int = 9, max_rank: int = 4) -> tuple[list[int], list[int]]:
    """Random map ranks for arrows 0..L-1 with zero outer arrows, and the implied term ranks."""
    length = rng.randint(3, max_len)
    maps = [0] + [rng.randint(0, max_rank) for _ in range(length - 3)] + [0]
    terms = [(maps[i - 1] if i > 0 else 0) + (maps[i] if i < len(maps) else 0) for i in range(length)]
    return maps, terms


def solver_soundness(max_n: int, trials: int = SOLVER_TRIALS, seed: int = 20261016) -> tuple[bool, str]:
    rng = random.Random(seed)
    problems = []
    for t in range(trials):
        maps, terms = random_sequence(rng)
        if sum(-r if i % 2 else r for i, r in enumerate(terms)) != 0:
            problems.append((t, "alternating sum"))
        erased = {i for i in range(1, len(terms) - 1) if rng.random() < 0.5}
        spec = ExactSequenceSpec(
            tuple(Unknown(f"x{i}") if i in erased else Known(r) for i, r in enumerate(terms)),
            tuple(MapHypothesis(i, r) for i, r in enumerate(maps)),
        )
        solved = solve_exact_sequence(spec)
        if solved.alternating_sum() != 0 or any(solved.assignment[f"x{i}"] != terms[i] for i in erased):
            problems.append((t, "recover"))
    # one interior arrow between two known terms, unconstrained by anything
    spec = ExactSequenceSpec((Known(0), Unknown("a"), Known(1), Known(1), Unknown("b"), Known(0)))
    try:
        solve_exact_sequence(spec)
        problems.append(("free arrow", "silently solved"))
    except Underdetermined as exc:
        if len(exc.free_parameters) != 1:
            problems.append(("free arrow", f"{len(exc.free_parameters)} parameters"))
    return not problems, f"{trials} trials, problems {problems[:5]}"


def kunneth(max_n: int) -> tuple[bool, str]:
    bad = []
    for a in range(KUNNETH_MAX + 1):
        for b in range(KUNNETH_MAX + 1):
            cells = {}
            for i in range(a + 1):
                for j in range(b + 1):
                    cells[2 * (i + j)] = cells.get(2 * (i + j), 0) + 1
            if poly_mul(projective_poincare(a), projective_poincare(b)) != Polynomial(cells):
                bad.append((a, b))
    return not bad, f"failing (a, b): {bad}"


CRITERIA = (
    Criterion(1, "quadric oracle", quadric_oracle),
    Criterion(2, "Euler cross-check", euler_cross_check),
    Criterion(3, "PSU structure", psu_structure),
    Criterion(4, "lower-degree pattern", lower_degree_pattern),
    Criterion(5, "shape", shape),
    Criterion(6, "point counting", point_counting),
    Criterion(7, "literal corollary", literal_corollary),
    Criterion(8, "unimodality claims", unimodality),
    Criterion(9, "solver soundness", solver_soundness),
    Criterion(10, "Kunneth", kunneth),
)


def run_all(max_n: int = 8) -> list[tuple[Criterion, bool, str]]:
    return [(c, *c.check(max_n)) for c in CRITERIA]
