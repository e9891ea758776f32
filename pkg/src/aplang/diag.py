"""The square-diagonal operation on words and regular languages.

A word of length n*n, laid out row-major in an n-by-n array, has its main
diagonal at indices 0, n+1, 2(n+1), ...  diag of a language keeps only the
square-length members and maps each to its diagonal word.  The automaton
construction guesses the gap matrix (some power of the transition union M)
up front and checks the guess at acceptance time, which keeps the state
space finite because matrix powers are eventually periodic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import isqrt
from typing import Sequence, TypeVar

from .automata import Dfa, Nfa, Word
from .boolmat import (
    BoolMatrix,
    BoolVector,
    dot,
    incidence_matrices,
    mat_pow,
    power_orbit,
    vec_mat_mul,
)

W = TypeVar("W", bound=Sequence)

DEFAULT_WORD_BUDGET = 1 << 20


class BudgetExceededError(RuntimeError):
    """Raised when a literal enumeration would visit too many candidates."""


def diag_word(w: W) -> W:
    """Main diagonal of a word of square length n*n (n >= 1)."""
    n = isqrt(len(w))
    if n == 0 or n * n != len(w):
        raise ValueError("length is not a perfect square")
    return w[:: n + 1]


@dataclass(frozen=True)
class DiagState:
    """Automaton state after at least one diagonal letter.

    reach: boolean row vector of source states reachable so far.
    steps: running power of M, one factor per letter read.
    gap: the guessed matrix bridging consecutive diagonal letters; the
    guess is confirmed at acceptance time by steps == gap.
    """

    reach: BoolVector
    steps: BoolMatrix
    gap: BoolMatrix


def build_diag_nfa(d: Dfa) -> Nfa:
    """NFA accepting exactly the diagonal words of the DFA's language.

    The first letter fans out over every distinct power of M as the gap
    guess.  Each further letter a updates reach to (reach * gap) * M_a:
    the gap sits between consecutive diagonal letters, never after the
    last one.  A state accepts iff its reach vector meets the accepting
    set and the running power equals the guess, i.e. the gap really is
    M^t for the t letters read.
    """
    mats, m = incidence_matrices(d)
    guesses = power_orbit(m).powers
    k = len(d.alphabet)
    final = BoolVector.from_indices(d.size, d.accepting)
    unit = BoolVector.unit(d.size, d.start)

    index: dict[DiagState, int] = {}
    order: list[DiagState] = []

    def state_of(s: DiagState) -> int:
        if s not in index:
            index[s] = len(order) + 1
            order.append(s)
        return index[s]

    entry_row = tuple(
        frozenset(
            state_of(DiagState(vec_mat_mul(unit, mats[c]), m, guess))
            for guess in guesses
        )
        for c in range(k)
    )
    rows: list[tuple[frozenset[int], ...]] = [entry_row]
    i = 0
    while i < len(order):
        s = order[i]
        bridged = vec_mat_mul(s.reach, s.gap)
        rows.append(
            tuple(
                frozenset(
                    (state_of(DiagState(vec_mat_mul(bridged, mats[c]), s.steps @ m, s.gap)),)
                )
                for c in range(k)
            )
        )
        i += 1

    accepting = frozenset(
        idx + 1
        for idx, s in enumerate(order)
        if dot(s.reach, final) and s.steps == s.gap
    )
    return Nfa(d.alphabet, 1 + len(order), frozenset((0,)), accepting, tuple(rows))


def _build_diag_nfa_gap_after(d: Dfa) -> Nfa:
    """Variant stepping with the gap applied after each non-initial letter
    (reach * M_a * gap).  Diverges from diag semantics at two letters; kept
    so the verification harness can demonstrate the divergence."""
    mats, m = incidence_matrices(d)
    guesses = power_orbit(m).powers
    k = len(d.alphabet)
    final = BoolVector.from_indices(d.size, d.accepting)
    unit = BoolVector.unit(d.size, d.start)

    index: dict[DiagState, int] = {}
    order: list[DiagState] = []

    def state_of(s: DiagState) -> int:
        if s not in index:
            index[s] = len(order) + 1
            order.append(s)
        return index[s]

    entry_row = tuple(
        frozenset(
            state_of(DiagState(vec_mat_mul(unit, mats[c]), m, guess))
            for guess in guesses
        )
        for c in range(k)
    )
    rows: list[tuple[frozenset[int], ...]] = [entry_row]
    i = 0
    while i < len(order):
        s = order[i]
        rows.append(
            tuple(
                frozenset(
                    (
                        state_of(
                            DiagState(
                                vec_mat_mul(vec_mat_mul(s.reach, mats[c]), s.gap),
                                s.steps @ m,
                                s.gap,
                            )
                        ),
                    )
                )
                for c in range(k)
            )
        )
        i += 1

    accepting = frozenset(
        idx + 1
        for idx, s in enumerate(order)
        if dot(s.reach, final) and s.steps == s.gap
    )
    return Nfa(d.alphabet, 1 + len(order), frozenset((0,)), accepting, tuple(rows))


def diag_oracle_accepts(d: Dfa, w: Word) -> bool:
    """Word-level oracle: is w the diagonal of some accepted square word?

    No guessing involved: between consecutive diagonal letters lie exactly
    t = len(w) free letters, and M^t sums all length-t paths, so one pass
    multiplying letter matrices interleaved with M^t decides membership.
    """
    t = len(w)
    if t == 0:
        raise ValueError("the empty word has no diagonal source")
    mats, m = incidence_matrices(d)
    if any(not 0 <= s < len(mats) for s in w):
        raise ValueError("symbol outside the alphabet")
    gap = mat_pow(m, t)
    v = BoolVector.unit(d.size, d.start)
    for j, s in enumerate(w):
        v = vec_mat_mul(v, mats[s])
        if j < t - 1:
            v = vec_mat_mul(v, gap)
    return bool(dot(v, BoolVector.from_indices(d.size, d.accepting)))


def diag_oracle_exhaustive(
    d: Dfa, t: int, budget: int = DEFAULT_WORD_BUDGET
) -> set[Word]:
    """Literal enumeration: diagonals of every accepted word of length t*t.

    Refuses (BudgetExceededError) when the alphabet size to the t*t power
    exceeds the budget.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    k = len(d.alphabet)
    candidates = k ** (t * t)
    if candidates > budget:
        raise BudgetExceededError(
            f"{candidates} candidate words exceed the budget of {budget}"
        )
    out: set[Word] = set()
    for tup in product(range(k), repeat=t * t):
        if d.accepts(tup):
            out.add(diag_word(tup))
    return out
