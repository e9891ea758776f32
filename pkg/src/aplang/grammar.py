"""Context-free grammars plus the structured languages behind the
infinite-filtration and diagonal counterexamples.

CYK over Chomsky normal form decides membership; bounded enumeration walks
leftmost derivations with minimum-yield pruning.  The three built-in
languages each come with a direct structural predicate that parses the
displayed pattern with no grammar involved, serving as the independent
oracle for every grammar-based result.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import isqrt
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .automata import Alphabet, Word

Rhs = tuple[str, ...]


@dataclass(frozen=True)
class Cfg:
    """Context-free grammar over string tokens.

    rules holds one entry per nonterminal, in nonterminal declaration
    order, so structurally equal grammars compare equal and survive a JSON
    round trip unchanged.
    """

    terminals: Alphabet
    nonterminals: tuple[str, ...]
    start: str
    rules: tuple[tuple[str, tuple[Rhs, ...]], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "nonterminals", tuple(self.nonterminals))
        object.__setattr__(
            self,
            "rules",
            tuple((lhs, tuple(tuple(r) for r in rhss)) for lhs, rhss in self.rules),
        )
        nts = set(self.nonterminals)
        if len(nts) != len(self.nonterminals):
            raise ValueError("duplicate nonterminal names")
        if self.start not in nts:
            raise ValueError("start symbol is not a declared nonterminal")
        terms = set(self.terminals.names)
        if nts & terms:
            raise ValueError("terminal and nonterminal names overlap")
        if tuple(lhs for lhs, _ in self.rules) != self.nonterminals:
            raise ValueError("rules must list every nonterminal once, in order")
        for _, rhss in self.rules:
            for rhs in rhss:
                for sym in rhs:
                    if sym not in nts and sym not in terms:
                        raise ValueError(f"undeclared symbol {sym!r} in a rule")

    @classmethod
    def make(
        cls,
        terminals: Alphabet,
        nonterminals: Sequence[str],
        start: str,
        rules: Mapping[str, Iterable[Sequence[str]]],
    ) -> "Cfg":
        for lhs in rules:
            if lhs not in nonterminals:
                raise ValueError(f"rule head {lhs!r} is not a declared nonterminal")
        grouped = tuple(
            (nt, tuple(tuple(r) for r in rules.get(nt, ())))
            for nt in nonterminals
        )
        return cls(terminals, tuple(nonterminals), start, grouped)

    def rhs_for(self, nt: str) -> tuple[Rhs, ...]:
        for lhs, rhss in self.rules:
            if lhs == nt:
                return rhss
        raise ValueError(f"unknown nonterminal {nt!r}")

    def productions(self) -> Iterator[tuple[str, Rhs]]:
        for lhs, rhss in self.rules:
            for rhs in rhss:
                yield lhs, rhs

    def nonterminal_set(self) -> frozenset[str]:
        return frozenset(self.nonterminals)

    def is_cnf(self) -> bool:
        nts = self.nonterminal_set()
        for lhs, rhs in self.productions():
            if rhs == ():
                if lhs != self.start:
                    return False
            elif len(rhs) == 1:
                if rhs[0] in nts:
                    return False
            elif len(rhs) == 2:
                if rhs[0] not in nts or rhs[1] not in nts:
                    return False
            else:
                return False
        return True


def to_cnf(g: Cfg) -> Cfg:
    """Weakly equivalent Chomsky normal form; the empty word, if generated,
    survives only as an epsilon rule on a fresh start symbol."""
    used = set(g.nonterminals) | set(g.terminals.names)

    def fresh(base: str) -> str:
        if base not in used:
            used.add(base)
            return base
        i = 0
        while f"{base}{i}" in used:
            i += 1
        used.add(f"{base}{i}")
        return f"{base}{i}"

    order: list[str] = []

    def declare(name: str) -> str:
        order.append(name)
        return name

    new_start = declare(fresh(g.start + "'"))
    for nt in g.nonterminals:
        order.append(nt)
    prods: list[tuple[str, Rhs]] = [(new_start, (g.start,))]
    prods.extend(g.productions())

    # wrap terminals appearing in long right-hand sides
    nts = set(order)
    wrappers: dict[str, str] = {}
    wrapped: list[tuple[str, Rhs]] = []
    for lhs, rhs in prods:
        if len(rhs) >= 2:
            new_rhs = []
            for sym in rhs:
                if sym in nts:
                    new_rhs.append(sym)
                else:
                    if sym not in wrappers:
                        wrappers[sym] = declare(fresh(f"T_{sym}"))
                        nts.add(wrappers[sym])
                        wrapped.append((wrappers[sym], (sym,)))
                    new_rhs.append(wrappers[sym])
            wrapped.append((lhs, tuple(new_rhs)))
        else:
            wrapped.append((lhs, rhs))

    # binarize
    binary: list[tuple[str, Rhs]] = []
    for lhs, rhs in wrapped:
        while len(rhs) > 2:
            link = declare(fresh("B"))
            nts.add(link)
            binary.append((lhs, (rhs[0], link)))
            lhs, rhs = link, rhs[1:]
        binary.append((lhs, rhs))

    # eliminate epsilon rules
    nullable: set[str] = set()
    changed = True
    while changed:
        changed = False
        for lhs, rhs in binary:
            if lhs not in nullable and all(s in nullable for s in rhs):
                nullable.add(lhs)
                changed = True
    expanded: list[tuple[str, Rhs]] = []
    seen_prods: set[tuple[str, Rhs]] = set()
    for lhs, rhs in binary:
        spots = [i for i, s in enumerate(rhs) if s in nullable]
        for keep in product((True, False), repeat=len(spots)):
            drop = {i for i, k in zip(spots, keep) if not k}
            new_rhs = tuple(s for i, s in enumerate(rhs) if i not in drop)
            if not new_rhs:
                continue
            if (lhs, new_rhs) not in seen_prods:
                seen_prods.add((lhs, new_rhs))
                expanded.append((lhs, new_rhs))
    if new_start in nullable:
        expanded.append((new_start, ()))

    # eliminate unit rules by lifting through the unit closure
    by_lhs: dict[str, list[Rhs]] = {nt: [] for nt in order}
    for lhs, rhs in expanded:
        by_lhs[lhs].append(rhs)
    closure: dict[str, set[str]] = {nt: {nt} for nt in order}
    changed = True
    while changed:
        changed = False
        for nt in order:
            for target in list(closure[nt]):
                for rhs in by_lhs[target]:
                    if len(rhs) == 1 and rhs[0] in nts and rhs[0] not in closure[nt]:
                        closure[nt].add(rhs[0])
                        changed = True
    final_rules: dict[str, list[Rhs]] = {nt: [] for nt in order}
    for nt in order:
        emitted: set[Rhs] = set()
        for target in sorted(closure[nt], key=order.index):
            for rhs in by_lhs[target]:
                is_unit = len(rhs) == 1 and rhs[0] in nts
                if not is_unit and rhs not in emitted:
                    if rhs == () and nt != new_start:
                        continue
                    emitted.add(rhs)
                    final_rules[nt].append(rhs)

    return Cfg.make(g.terminals, tuple(order), new_start, final_rules)


@lru_cache(maxsize=None)
def _cnf_form(g: Cfg) -> Cfg:
    return to_cnf(g)


@lru_cache(maxsize=None)
def _cyk_indexes(cnf: Cfg):
    term_index: dict[str, frozenset[str]] = {}
    pair_index: dict[tuple[str, str], frozenset[str]] = {}
    nts = cnf.nonterminal_set()
    terms: dict[str, set[str]] = {}
    pairs: dict[tuple[str, str], set[str]] = {}
    for lhs, rhs in cnf.productions():
        if len(rhs) == 1 and rhs[0] not in nts:
            terms.setdefault(rhs[0], set()).add(lhs)
        elif len(rhs) == 2:
            pairs.setdefault((rhs[0], rhs[1]), set()).add(lhs)
    term_index = {t: frozenset(v) for t, v in terms.items()}
    pair_index = {p: frozenset(v) for p, v in pairs.items()}
    return term_index, pair_index


def cyk_accepts(g: Cfg, w: Word) -> bool:
    """Membership via CYK on the grammar's Chomsky normal form."""
    k = len(g.terminals)
    for s in w:
        if not 0 <= s < k:
            raise ValueError(f"symbol {s} is outside the terminal alphabet")
    cnf = _cnf_form(g)
    if not w:
        return () in cnf.rhs_for(cnf.start)
    term_index, pair_index = _cyk_indexes(cnf)
    n = len(w)
    toks = [g.terminals.names[s] for s in w]
    table: list[list[set[str]]] = [[set() for _ in range(n + 1)] for _ in range(n)]
    for i, tok in enumerate(toks):
        table[i][1] = set(term_index.get(tok, ()))
    for span in range(2, n + 1):
        for i in range(n - span + 1):
            cell = table[i][span]
            for split in range(1, span):
                left = table[i][split]
                right = table[i + split][span - split]
                if left and right:
                    for b in left:
                        for c in right:
                            hit = pair_index.get((b, c))
                            if hit:
                                cell |= hit
    return cnf.start in table[0][n]


def _min_yields(g: Cfg) -> dict[str, int]:
    """Shortest derivable terminal length per productive nonterminal."""
    nts = g.nonterminal_set()
    yields: dict[str, int] = {}
    changed = True
    while changed:
        changed = False
        for lhs, rhs in g.productions():
            total = 0
            ok = True
            for sym in rhs:
                if sym in nts:
                    if sym not in yields:
                        ok = False
                        break
                    total += yields[sym]
                else:
                    total += 1
            if ok and (lhs not in yields or total < yields[lhs]):
                yields[lhs] = total
                changed = True
    return yields


def enumerate_cfg_words(g: Cfg, max_len: int) -> set[Word]:
    """Exactly the generated words of length <= max_len, by breadth-first
    leftmost derivation over sentential forms, pruned by each
    nonterminal's minimum yield."""
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    yields = _min_yields(g)
    if g.start not in yields:
        return set()
    nts = g.nonterminal_set()

    def lower_bound(form: tuple[str, ...]) -> Optional[int]:
        total = 0
        for sym in form:
            if sym in nts:
                y = yields.get(sym)
                if y is None:
                    return None
                total += y
            else:
                total += 1
        return total

    out: set[Word] = set()
    start_form = (g.start,)
    seen = {start_form}
    queue = deque([start_form])
    while queue:
        form = queue.popleft()
        for pos, sym in enumerate(form):
            if sym in nts:
                break
        else:
            out.add(g.terminals.word_of(form))
            continue
        for rhs in g.rhs_for(sym):
            new_form = form[:pos] + rhs + form[pos + 1 :]
            bound = lower_bound(new_form)
            if bound is not None and bound <= max_len and new_form not in seen:
                seen.add(new_form)
                queue.append(new_form)
    return out


# ---------------------------------------------------------------------------
# Built-in language 1: {1 0^n 2 (0^+ 3)^n : n >= 1}, whose weak filtrations
# are pairwise distinct.

THM2_ALPHABET = Alphabet(("0", "1", "2", "3"))

THM2_GRAMMAR = Cfg.make(
    THM2_ALPHABET,
    ("S", "A", "B"),
    "S",
    {
        "S": [("1", "0", "A", "B")],
        "A": [("0", "A", "B"), ("2",)],
        "B": [("0", "B"), ("0", "3")],
    },
)


def in_thm2(s: str) -> bool:
    """Structural parse of 1 0^n 2 (0^+ 3)^n with n >= 1."""
    i = 0
    if i >= len(s) or s[i] != "1":
        return False
    i += 1
    n = 0
    while i < len(s) and s[i] == "0":
        i += 1
        n += 1
    if n < 1 or i >= len(s) or s[i] != "2":
        return False
    i += 1
    for _ in range(n):
        run = 0
        while i < len(s) and s[i] == "0":
            i += 1
            run += 1
        if run < 1 or i >= len(s) or s[i] != "3":
            return False
        i += 1
    return i == len(s)


# ---------------------------------------------------------------------------
# Built-in language 2: {0^n 1^n : n >= 0}, whose shifts are pairwise distinct.

ZERO_ONE_ALPHABET = Alphabet(("0", "1"))

ZERO_N_ONE_N_GRAMMAR = Cfg.make(
    ZERO_ONE_ALPHABET,
    ("S",),
    "S",
    {"S": [("0", "S", "1"), ()]},
)


def in_0n1n(s: str) -> bool:
    i = 0
    while i < len(s) and s[i] == "0":
        i += 1
    zeros = i
    while i < len(s) and s[i] == "1":
        i += 1
    return i == len(s) and len(s) == 2 * zeros


# ---------------------------------------------------------------------------
# Built-in language 3: three chained blocks of zero runs whose diagonal is
# not context-free.  Block shape: X 0^{3m+1} Y (0^+ Z)^{m-2} 0^+ with
# m >= 3, for (X, Y, Z) = (a, b, c), (d, e, f), (g, h, i), then a final j.

THM5_ALPHABET = Alphabet(tuple("abcdefghij0"))

_THM5_BLOCKS = (("a", "b", "c"), ("d", "e", "f"), ("g", "h", "i"))


def _parse_thm5_block(s: str, i: int, first: str, second: str, repeated: str) -> Optional[int]:
    if i >= len(s) or s[i] != first:
        return None
    i += 1
    run = 0
    while i < len(s) and s[i] == "0":
        i += 1
        run += 1
    if run < 10 or (run - 1) % 3:
        return None
    m = (run - 1) // 3
    if i >= len(s) or s[i] != second:
        return None
    i += 1
    groups = 0
    while True:
        run = 0
        while i < len(s) and s[i] == "0":
            i += 1
            run += 1
        if run < 1:
            return None
        if i < len(s) and s[i] == repeated:
            i += 1
            groups += 1
        else:
            break
    return i if groups == m - 2 else None


def in_thm5(s: str) -> bool:
    """Structural parse of the three-block language (the authoritative
    oracle; the language is context-free as a concatenation of its blocks
    but is represented here by its pattern, not a grammar)."""
    pos: Optional[int] = 0
    for first, second, repeated in _THM5_BLOCKS:
        pos = _parse_thm5_block(s, pos, first, second, repeated)
        if pos is None:
            return False
    return pos == len(s) - 1 and s[pos] == "j"


def thm5_witness(t: int) -> str:
    """The member with m = n = p = t + 2 and every variable zero run of
    length 3m+1; its total length is (3m+1)^2 and its diagonal is
    ab c^t de f^t gh i^t j."""
    if t < 1:
        raise ValueError("t must be at least 1")
    m = t + 2
    z = "0" * (3 * m + 1)
    parts = []
    for first, second, repeated in _THM5_BLOCKS:
        parts.append(first + z + second + (z + repeated) * (m - 2) + z)
    return "".join(parts) + "j"


def _thm5_segments(m: int, n: int, p: int) -> list[tuple]:
    segs: list[tuple] = []
    for (first, second, repeated), count in zip(_THM5_BLOCKS, (m, n, p)):
        segs.append(("lit", first))
        segs.append(("fixed", 3 * count + 1))
        segs.append(("lit", second))
        for _ in range(count - 2):
            segs.append(("var",))
            segs.append(("lit", repeated))
        segs.append(("var",))
    segs.append(("lit", "j"))
    return segs


def enumerate_thm5_by_length(
    total_len: int, diag_prefilter: Optional[str] = None
) -> Iterator[str]:
    """Every member of the three-block language with the exact total
    length, ordered by (m, n, p) then by zero-run compositions.

    With a prefilter (a word of length sqrt(total_len), "?" as wildcard),
    any partial assignment whose already-placed diagonal letters mismatch
    the pattern is pruned; diagonal positions sit at multiples of
    sqrt(total_len) + 1.
    """
    if total_len < 0:
        raise ValueError("total_len must be non-negative")
    pattern: Optional[tuple[Optional[str], ...]] = None
    diag_step = 0
    if diag_prefilter is not None:
        t = isqrt(total_len)
        if t == 0 or t * t != total_len:
            raise ValueError("total_len is not a perfect square")
        if len(diag_prefilter) != t:
            raise ValueError("prefilter length must be the square root of total_len")
        allowed = set(THM5_ALPHABET.names) | {"?"}
        if any(ch not in allowed for ch in diag_prefilter):
            raise ValueError("prefilter may use alphabet letters and '?' only")
        pattern = tuple(None if ch == "?" else ch for ch in diag_prefilter)
        diag_step = t + 1

    def lit_ok(pos: int, ch: str) -> bool:
        if pattern is None or pos % diag_step:
            return True
        want = pattern[pos // diag_step]
        return want is None or want == ch

    def run_ok(pos: int, length: int) -> bool:
        if pattern is None:
            return True
        d = -(-pos // diag_step) * diag_step
        while d < pos + length:
            want = pattern[d // diag_step]
            if want is not None and want != "0":
                return False
            d += diag_step
        return True

    def emit(segs: list[tuple], suffix_min: list[int], idx: int, pos: int, parts: list[str]) -> Iterator[str]:
        if idx == len(segs):
            if pos == total_len:
                yield "".join(parts)
            return
        seg = segs[idx]
        if seg[0] == "lit":
            ch = seg[1]
            if pos + suffix_min[idx] <= total_len and lit_ok(pos, ch):
                parts.append(ch)
                yield from emit(segs, suffix_min, idx + 1, pos + 1, parts)
                parts.pop()
        elif seg[0] == "fixed":
            length = seg[1]
            if pos + suffix_min[idx] <= total_len and run_ok(pos, length):
                parts.append("0" * length)
                yield from emit(segs, suffix_min, idx + 1, pos + length, parts)
                parts.pop()
        else:  # variable zero run, length >= 1
            slack = total_len - pos - suffix_min[idx]
            for extra in range(slack + 1):
                length = 1 + extra
                if run_ok(pos, length):
                    parts.append("0" * length)
                    yield from emit(segs, suffix_min, idx + 1, pos + length, parts)
                    parts.pop()

    m = 3
    while 5 * m + 31 <= total_len:
        n = 3
        while 5 * m + 5 * n + 16 <= total_len:
            p = 3
            while 5 * m + 5 * n + 5 * p + 1 <= total_len:
                segs = _thm5_segments(m, n, p)
                suffix_min = [0] * (len(segs) + 1)
                for i in range(len(segs) - 1, -1, -1):
                    seg = segs[i]
                    weight = seg[1] if seg[0] == "fixed" else 1
                    suffix_min[i] = suffix_min[i + 1] + weight
                yield from emit(segs, suffix_min, 0, 0, [])
                p += 1
            n += 1
        m += 1
