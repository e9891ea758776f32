"""Complete DFAs, epsilon-free NFAs, and the standard algorithms on them.

Words are tuples of symbol indices into an Alphabet.  Every automaton is
immutable after construction and every operation is a pure function, so
values can be shared freely.  minimized() returns a canonical record:
two DFAs over the same alphabet accept the same language iff their
minimized forms compare equal.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, replace
from typing import Iterable, Mapping, Optional

Word = tuple[int, ...]

EPSILON: Word = ()


@dataclass(frozen=True)
class Alphabet:
    """Ordered, duplicate-free sequence of printable symbol tokens."""

    names: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "names", tuple(self.names))
        if not self.names:
            raise ValueError("alphabet must be nonempty")
        if len(set(self.names)) != len(self.names):
            raise ValueError("alphabet tokens must be unique")
        if any(not isinstance(t, str) or not t for t in self.names):
            raise ValueError("alphabet tokens must be nonempty strings")

    @staticmethod
    def from_string(tokens: str) -> "Alphabet":
        return Alphabet(tuple(tokens))

    def __len__(self) -> int:
        return len(self.names)

    def index(self, token: str) -> int:
        try:
            return self.names.index(token)
        except ValueError:
            raise ValueError(f"token {token!r} is not in the alphabet") from None

    def word(self, text: str) -> Word:
        """Parse a word of single-character tokens."""
        return tuple(self.index(ch) for ch in text)

    def word_of(self, tokens: Iterable[str]) -> Word:
        return tuple(self.index(t) for t in tokens)

    def format(self, word: Word) -> str:
        return "".join(self.names[s] for s in word)


def _check_word(alphabet: Alphabet, word: Word) -> None:
    k = len(alphabet)
    for s in word:
        if not 0 <= s < k:
            raise ValueError(f"symbol {s} is outside the alphabet")


@dataclass(frozen=True)
class Dfa:
    """Complete deterministic automaton: delta[q][c] is defined for every
    state q and symbol c."""

    alphabet: Alphabet
    size: int
    start: int
    accepting: frozenset[int]
    delta: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        if self.size <= 0:
            raise ValueError("state count must be positive")
        if not 0 <= self.start < self.size:
            raise ValueError("start state out of range")
        if not all(0 <= q < self.size for q in self.accepting):
            raise ValueError("accepting state out of range")
        k = len(self.alphabet)
        if len(self.delta) != self.size or any(len(row) != k for row in self.delta):
            raise ValueError("transition table must be total")
        for row in self.delta:
            for t in row:
                if not 0 <= t < self.size:
                    raise ValueError("transition target out of range")

    @classmethod
    def build(
        cls,
        alphabet: Alphabet,
        size: int,
        start: int,
        accepting: Iterable[int],
        transitions: Mapping[tuple[int, int], int],
    ) -> "Dfa":
        """Build from a possibly partial table; missing transitions go to an
        implicit dead state appended as index `size`."""
        k = len(alphabet)
        for (q, c), t in transitions.items():
            if not (0 <= q < size and 0 <= c < k and 0 <= t < size):
                raise ValueError(f"transition ({q}, {c}) -> {t} out of range")
        complete = all((q, c) in transitions for q in range(size) for c in range(k))
        total = size if complete else size + 1
        dead = size
        rows = []
        for q in range(total):
            if q == dead and not complete:
                rows.append(tuple(dead for _ in range(k)))
            else:
                rows.append(tuple(transitions.get((q, c), dead) for c in range(k)))
        return cls(alphabet, total, start, frozenset(accepting), tuple(rows))

    def accepts(self, word: Word) -> bool:
        _check_word(self.alphabet, word)
        q = self.start
        for s in word:
            q = self.delta[q][s]
        return q in self.accepting

    def to_nfa(self) -> "Nfa":
        rows = tuple(
            tuple(frozenset((t,)) for t in row) for row in self.delta
        )
        return Nfa(self.alphabet, self.size, frozenset((self.start,)), self.accepting, rows)

    def complement(self) -> "Dfa":
        return replace(self, accepting=frozenset(range(self.size)) - self.accepting)

    def intersect(self, other: "Dfa") -> "Dfa":
        """Product automaton over reachable state pairs."""
        if self.alphabet != other.alphabet:
            raise ValueError("alphabet mismatch")
        k = len(self.alphabet)
        start = (self.start, other.start)
        index = {start: 0}
        order = [start]
        rows: list[tuple[int, ...]] = []
        for q1, q2 in order:
            row = []
            for c in range(k):
                t = (self.delta[q1][c], other.delta[q2][c])
                if t not in index:
                    index[t] = len(order)
                    order.append(t)
                row.append(index[t])
            rows.append(tuple(row))
        accepting = frozenset(
            i for i, (q1, q2) in enumerate(order)
            if q1 in self.accepting and q2 in other.accepting
        )
        return Dfa(self.alphabet, len(order), 0, accepting, tuple(rows))

    def is_empty(self) -> bool:
        return self.shortest_word_length() is None

    def shortest_word_length(self) -> Optional[int]:
        """Length of a shortest accepted word by breadth-first search, or
        None when the language is empty."""
        if self.start in self.accepting:
            return 0
        dist = {self.start: 0}
        queue = deque([self.start])
        while queue:
            q = queue.popleft()
            for t in self.delta[q]:
                if t not in dist:
                    dist[t] = dist[q] + 1
                    if t in self.accepting:
                        return dist[t]
                    queue.append(t)
        return None

    def _distance_to_accepting(self) -> list[float]:
        """Per-state shortest distance to an accepting state (inf if none)."""
        k = len(self.alphabet)
        back: list[list[int]] = [[] for _ in range(self.size)]
        for q in range(self.size):
            for c in range(k):
                back[self.delta[q][c]].append(q)
        dist: list[float] = [float("inf")] * self.size
        queue = deque()
        for q in self.accepting:
            dist[q] = 0
            queue.append(q)
        while queue:
            q = queue.popleft()
            for p in back[q]:
                if dist[p] == float("inf"):
                    dist[p] = dist[q] + 1
                    queue.append(p)
        return dist

    def enumerate_accepted(self, max_len: int) -> list[Word]:
        """Exactly the accepted words of length <= max_len, in
        length-then-lexicographic order (symbols in alphabet order)."""
        if max_len < 0:
            raise ValueError("max_len must be non-negative")
        k = len(self.alphabet)
        dist = self._distance_to_accepting()
        out: list[Word] = []
        layer: list[tuple[Word, int]] = []
        if dist[self.start] <= max_len:
            layer.append(((), self.start))
        for length in range(max_len + 1):
            for w, q in layer:
                if q in self.accepting:
                    out.append(w)
            if length == max_len:
                break
            nxt: list[tuple[Word, int]] = []
            budget = max_len - length - 1
            for w, q in layer:
                for c in range(k):
                    t = self.delta[q][c]
                    if dist[t] <= budget:
                        nxt.append((w + (c,), t))
            layer = nxt
        return out

    def equivalent(self, other: "Dfa") -> bool:
        """Language equality, decided as identity of canonical minimized forms."""
        if self.alphabet != other.alphabet:
            raise ValueError("alphabet mismatch")
        return self.minimized() == other.minimized()

    def minimized(self) -> "Dfa":
        """Unique minimal complete DFA in canonical form: states renumbered
        by breadth-first discovery order from the start state, scanning
        symbols in alphabet order."""
        k = len(self.alphabet)
        # restrict to reachable states, in BFS discovery order
        order = [self.start]
        seen = {self.start: 0}
        for q in order:
            for c in range(k):
                t = self.delta[q][c]
                if t not in seen:
                    seen[t] = len(order)
                    order.append(t)
        # Moore partition refinement
        block = {q: (0 if q in self.accepting else 1) for q in order}
        nblocks = len(set(block.values()))
        while True:
            keys = {
                q: (block[q], tuple(block[self.delta[q][c]] for c in range(k)))
                for q in order
            }
            relabel: dict[tuple, int] = {}
            for q in order:
                relabel.setdefault(keys[q], len(relabel))
            block = {q: relabel[keys[q]] for q in order}
            if len(relabel) == nblocks:
                break
            nblocks = len(relabel)
        # quotient, then canonical BFS renumbering
        rep: dict[int, int] = {}
        for q in order:
            rep.setdefault(block[q], q)
        new_index = {block[self.start]: 0}
        new_order = [block[self.start]]
        for b in new_order:
            q = rep[b]
            for c in range(k):
                tb = block[self.delta[q][c]]
                if tb not in new_index:
                    new_index[tb] = len(new_order)
                    new_order.append(tb)
        rows = tuple(
            tuple(new_index[block[self.delta[rep[b]][c]]] for c in range(k))
            for b in new_order
        )
        accepting = frozenset(
            new_index[b] for b in new_order if rep[b] in self.accepting
        )
        return Dfa(self.alphabet, len(new_order), 0, accepting, rows)


@dataclass(frozen=True)
class Nfa:
    """Nondeterministic automaton without epsilon transitions."""

    alphabet: Alphabet
    size: int
    initial: frozenset[int]
    accepting: frozenset[int]
    delta: tuple[tuple[frozenset[int], ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "initial", frozenset(self.initial))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        object.__setattr__(
            self, "delta", tuple(tuple(frozenset(s) for s in row) for row in self.delta)
        )
        if self.size <= 0:
            raise ValueError("state count must be positive")
        k = len(self.alphabet)
        if len(self.delta) != self.size or any(len(row) != k for row in self.delta):
            raise ValueError("transition table has the wrong shape")
        in_range = lambda q: 0 <= q < self.size
        if not all(in_range(q) for q in self.initial | self.accepting):
            raise ValueError("state out of range")
        for row in self.delta:
            for targets in row:
                if not all(in_range(t) for t in targets):
                    raise ValueError("transition target out of range")

    def accepts(self, word: Word) -> bool:
        _check_word(self.alphabet, word)
        current = self.initial
        for s in word:
            nxt: set[int] = set()
            for q in current:
                nxt.update(self.delta[q][s])
            if not nxt:
                return False
            current = frozenset(nxt)
        return bool(current & self.accepting)

    def determinize(self) -> Dfa:
        """Subset construction over the subsets reachable from the initial
        set; the empty subset doubles as the dead state when it shows up."""
        k = len(self.alphabet)
        start = self.initial
        index: dict[frozenset[int], int] = {start: 0}
        order: list[frozenset[int]] = [start]
        rows: list[tuple[int, ...]] = []
        for subset in order:
            row = []
            for c in range(k):
                target: set[int] = set()
                for q in subset:
                    target.update(self.delta[q][c])
                ft = frozenset(target)
                if ft not in index:
                    index[ft] = len(order)
                    order.append(ft)
                row.append(index[ft])
            rows.append(tuple(row))
        accepting = frozenset(
            i for i, subset in enumerate(order) if subset & self.accepting
        )
        return Dfa(self.alphabet, len(order), 0, accepting, tuple(rows))
