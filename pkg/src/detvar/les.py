"""Rank solver for bounded exact sequences of free abelian groups.

In an exact sequence ``0 -> T_0 -> T_1 -> ... -> T_L -> 0`` with arrows
``f_i: T_i -> T_{i+1}``, rank-nullity plus ``im f_{i-1} = ker f_i`` gives

    rank T_i = rank f_{i-1} + rank f_i,

with the outer arrows of rank zero. Knowing some term ranks and some arrow
ranks, the remaining unknowns are fixed by propagating these equations. What
propagation cannot fix lives on chains of arrows linked through known terms;
each such chain is a single integer parameter in an interval, so
determinacy is decided exactly rather than guessed.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Union

from detvar.graded import GradedRanks
from detvar.spaces import pgl_bm_ranks

log = logging.getLogger(__name__)


class SolverError(Exception):
    pass


class Inconsistent(SolverError):
    """No assignment of nonnegative ranks satisfies the constraints."""


@dataclass(frozen=True)
class FreeParameter:
    """A chain of arrows whose ranks move together with one integer ``x``.

    ``arrows[0]`` has rank ``x``; the admissible range is ``[low, high]``
    (``high is None`` means unbounded).
    """

    arrows: tuple[int, ...]
    low: int
    high: int | None


class Underdetermined(SolverError):
    def __init__(self, free_parameters: list[FreeParameter], note: str = ""):
        self.free_parameters = list(free_parameters)
        msg = f"{len(self.free_parameters)} free parameter(s): " + ", ".join(
            f"arrows {fp.arrows} in [{fp.low}, {'inf' if fp.high is None else fp.high}]"
            for fp in self.free_parameters
        )
        super().__init__(f"{note}: {msg}" if note else msg)


@dataclass(frozen=True)
class Known:
    rank: int

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")


@dataclass(frozen=True)
class Unknown:
    id: str


SequenceTerm = Union[Known, Unknown]


@dataclass(frozen=True)
class MapHypothesis:
    """Asserted rank of the arrow from position ``arrow`` to ``arrow + 1``."""

    arrow: int
    rank: int


@dataclass(frozen=True)
class ExactSequenceSpec:
    terms: tuple[SequenceTerm, ...]
    hypotheses: tuple[MapHypothesis, ...] = ()
    note: str = ""

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        object.__setattr__(self, "hypotheses", tuple(self.hypotheses))
        if len(self.terms) < 3:
            raise ValueError("an exact sequence needs at least three terms")
        if self.terms[0] != Known(0) or self.terms[-1] != Known(0):
            raise ValueError("both ends of the sequence must be Known(0)")
        ids = [t.id for t in self.terms if isinstance(t, Unknown)]
        if len(ids) != len(set(ids)):
            raise ValueError("unknown identifiers must be unique within a sequence")
        for h in self.hypotheses:
            if not 0 <= h.arrow < len(self.terms) - 1:
                raise ValueError(f"arrow index {h.arrow} out of range")
            if h.rank < 0:
                raise ValueError("map ranks are nonnegative")

    @property
    def n_arrows(self) -> int:
        return len(self.terms) - 1

    def substitute(self, assignment: dict[str, int]) -> ExactSequenceSpec:
        terms = [Known(assignment[t.id]) if isinstance(t, Unknown) and t.id in assignment else t for t in self.terms]
        return ExactSequenceSpec(tuple(terms), self.hypotheses, self.note)


@dataclass(frozen=True)
class SolvedSequence:
    assignment: dict[str, int]
    map_ranks: tuple[int, ...]
    term_ranks: tuple[int, ...] = field(default=())

    def alternating_sum(self) -> int:
        return sum(-r if i % 2 else r for i, r in enumerate(self.term_ranks))


def solve_exact_sequence(spec: ExactSequenceSpec) -> SolvedSequence:
    """Determine every unknown rank, or raise :class:`Underdetermined` / :class:`Inconsistent`."""
    terms = spec.terms
    L = spec.n_arrows
    r: list[int | None] = [None] * L

    for h in spec.hypotheses:
        if r[h.arrow] is not None and r[h.arrow] != h.rank:
            raise Inconsistent(f"{spec.note}: conflicting hypotheses on arrow {h.arrow}")
        r[h.arrow] = h.rank

    def get(j: int) -> int | None:
        return 0 if j < 0 or j >= L else r[j]

    def propagate() -> None:
        changed = True
        while changed:
            changed = False
            for i, t in enumerate(terms):
                if not isinstance(t, Known):
                    continue
                a, b = get(i - 1), get(i)
                if a is not None and b is not None:
                    if a + b != t.rank:
                        raise Inconsistent(
                            f"{spec.note}: term {i} has rank {t.rank} but adjacent arrows give {a} + {b}"
                        )
                elif a is not None or b is not None:
                    other = t.rank - (a if a is not None else b)
                    if other < 0:
                        raise Inconsistent(f"{spec.note}: term {i} forces a negative arrow rank {other}")
                    r[i if a is not None else i - 1] = other
                    changed = True

    while True:
        propagate()
        free: list[FreeParameter] = []
        fixed_one = False
        seen: set[int] = set()
        for j in range(L):
            if r[j] is not None or j in seen:
                continue
            # r[j+m] = c + s*x along the chain of known terms to the right
            chain, c, s = [j], 0, 1
            low, high = 0, None
            while chain[-1] + 1 < L and isinstance(terms[chain[-1] + 1], Known):
                c, s = terms[chain[-1] + 1].rank - c, -s
                chain.append(chain[-1] + 1)
                if s > 0:
                    low = max(low, -c)
                else:
                    high = c if high is None else min(high, c)
            seen.update(chain)
            if high is not None and low > high:
                raise Inconsistent(f"{spec.note}: no nonnegative ranks along arrows {tuple(chain)}")
            if high is not None and low == high:
                r[j] = low
                fixed_one = True
                break
            free.append(FreeParameter(tuple(chain), low, high))
        if fixed_one:
            continue
        if free:
            raise Underdetermined(free, spec.note)
        break

    term_ranks = tuple(t.rank if isinstance(t, Known) else get(i - 1) + get(i) for i, t in enumerate(terms))
    assignment = {t.id: term_ranks[i] for i, t in enumerate(terms) if isinstance(t, Unknown)}
    return SolvedSequence(assignment, tuple(r), term_ranks)


def y_id(k: int) -> str:
    return f"H_{k}(Y)"


def build_localization_system(n: int) -> list[ExactSequenceSpec]:
    """Short exact pieces of the localization sequence for ``Y ⊂ X = P^{n^2-1}``, ``U = X \\ Y``.

    For ``q = 1..n^2-1``::

        0 -> BM_{2q+1}(U) -> H_{2q}(Y) -> H_{2q}(X) -> BM_{2q}(U) -> H_{2q-1}(Y) -> 0

    ``Y``-degrees above ``2 dim Y`` are ``Known(0)``. For ``q <= n^2-3`` the
    restriction ``H_{2q}(X) -> BM_{2q}(U)`` is asserted to vanish (Chow groups
    of ``PGL_n`` vanish in that range); the two top pieces carry no hypothesis.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    s = n * n - 1
    top_y = 2 * (n * n - 2)
    u = pgl_bm_ranks(n)

    def y_term(k: int) -> SequenceTerm:
        return Known(0) if k > top_y else Unknown(y_id(k))

    specs = []
    for q in range(1, s + 1):
        terms = (
            Known(0),
            Known(u[2 * q + 1]),
            y_term(2 * q),
            Known(1),  # H_{2q}(X), 2q <= 2s
            Known(u[2 * q]),
            y_term(2 * q - 1),
            Known(0),
        )
        hyps = (MapHypothesis(3, 0),) if q <= n * n - 3 else ()
        specs.append(ExactSequenceSpec(terms, hyps, note=f"n={n}, q={q}"))
    return specs


def solve_determinantal_ranks(n: int) -> GradedRanks:
    """Betti numbers of ``Y`` re-derived from the localization system."""
    top_y = 2 * (n * n - 2)
    ranks: dict[str, int] = {y_id(0): 1}  # Y is path connected
    for spec in build_localization_system(n):
        solved = solve_exact_sequence(spec)
        for key, value in solved.assignment.items():
            if ranks.setdefault(key, value) != value:
                raise Inconsistent(f"{spec.note}: {key} solved as {value}, previously {ranks[key]}")
        log.debug("%s -> %s", spec.note, solved.assignment)
    by_degree = {k: ranks[y_id(k)] for k in range(top_y + 1) if y_id(k) in ranks}
    missing = [k for k in range(top_y + 1) if k not in by_degree]
    if missing:
        raise SolverError(f"n={n}: degrees {missing} never appear in the system")
    return GradedRanks(by_degree, top_y)
