"""JSON interchange formats for automata and grammars.

DFA: {"alphabet": ["a","b"], "states": 3, "start": 0, "accepting": [0],
      "delta": {"0": {"a": 1}, "1": {"b": 0}}}
Transitions omitted from a DFA go to an implicit dead state appended as
state index `states`.  The NFA format is identical except that "initial"
is a list and delta values are lists; omitted NFA transitions are simply
the empty target set.  Writers always emit complete tables, so a write
followed by a read reproduces the in-memory value exactly.
"""

from __future__ import annotations

import json
from typing import Any

from .automata import Alphabet, Dfa, Nfa
from .grammar import Cfg


def _require(obj: dict, key: str, kind: type) -> Any:
    if key not in obj:
        raise ValueError(f"missing field {key!r}")
    value = obj[key]
    if not isinstance(value, kind):
        raise ValueError(f"field {key!r} must be {kind.__name__}")
    return value


def _parse_alphabet(obj: dict) -> Alphabet:
    names = _require(obj, "alphabet", list)
    if not all(isinstance(t, str) for t in names):
        raise ValueError("alphabet tokens must be strings")
    return Alphabet(tuple(names))


def dfa_to_obj(d: Dfa) -> dict:
    return {
        "alphabet": list(d.alphabet.names),
        "states": d.size,
        "start": d.start,
        "accepting": sorted(d.accepting),
        "delta": {
            str(q): {d.alphabet.names[c]: d.delta[q][c] for c in range(len(d.alphabet))}
            for q in range(d.size)
        },
    }


def obj_to_dfa(obj: dict) -> Dfa:
    alphabet = _parse_alphabet(obj)
    size = _require(obj, "states", int)
    start = _require(obj, "start", int)
    accepting = _require(obj, "accepting", list)
    delta_obj = _require(obj, "delta", dict)
    transitions: dict[tuple[int, int], int] = {}
    for state_key, row in delta_obj.items():
        try:
            q = int(state_key)
        except ValueError:
            raise ValueError(f"state key {state_key!r} is not an integer") from None
        if not isinstance(row, dict):
            raise ValueError("delta rows must be objects")
        for token, target in row.items():
            if not isinstance(target, int):
                raise ValueError("transition targets must be integers")
            transitions[(q, alphabet.index(token))] = target
    return Dfa.build(alphabet, size, start, accepting, transitions)


def nfa_to_obj(n: Nfa) -> dict:
    return {
        "alphabet": list(n.alphabet.names),
        "states": n.size,
        "initial": sorted(n.initial),
        "accepting": sorted(n.accepting),
        "delta": {
            str(q): {
                n.alphabet.names[c]: sorted(n.delta[q][c])
                for c in range(len(n.alphabet))
            }
            for q in range(n.size)
        },
    }


def obj_to_nfa(obj: dict) -> Nfa:
    alphabet = _parse_alphabet(obj)
    size = _require(obj, "states", int)
    initial = _require(obj, "initial", list)
    accepting = _require(obj, "accepting", list)
    delta_obj = _require(obj, "delta", dict)
    k = len(alphabet)
    rows = [[frozenset() for _ in range(k)] for _ in range(size)]
    for state_key, row in delta_obj.items():
        try:
            q = int(state_key)
        except ValueError:
            raise ValueError(f"state key {state_key!r} is not an integer") from None
        if not 0 <= q < size:
            raise ValueError(f"state {q} out of range")
        if not isinstance(row, dict):
            raise ValueError("delta rows must be objects")
        for token, targets in row.items():
            if not isinstance(targets, list):
                raise ValueError("NFA transition targets must be lists")
            rows[q][alphabet.index(token)] = frozenset(targets)
    return Nfa(
        alphabet,
        size,
        frozenset(initial),
        frozenset(accepting),
        tuple(tuple(row) for row in rows),
    )


def cfg_to_obj(g: Cfg) -> dict:
    return {
        "terminals": list(g.terminals.names),
        "nonterminals": list(g.nonterminals),
        "start": g.start,
        "rules": {lhs: [list(rhs) for rhs in rhss] for lhs, rhss in g.rules},
    }


def obj_to_cfg(obj: dict) -> Cfg:
    terminals = Alphabet(tuple(_require(obj, "terminals", list)))
    nonterminals = _require(obj, "nonterminals", list)
    start = _require(obj, "start", str)
    rules_obj = _require(obj, "rules", dict)
    rules = {
        lhs: [tuple(rhs) for rhs in rhss] for lhs, rhss in rules_obj.items()
    }
    return Cfg.make(terminals, tuple(nonterminals), start, rules)


def load_dfa(path: str) -> Dfa:
    with open(path, encoding="utf-8") as fh:
        return obj_to_dfa(json.load(fh))


def save_dfa(d: Dfa, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(dfa_to_obj(d), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_nfa(path: str) -> Nfa:
    with open(path, encoding="utf-8") as fh:
        return obj_to_nfa(json.load(fh))


def save_nfa(n: Nfa, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(nfa_to_obj(n), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_cfg(path: str) -> Cfg:
    with open(path, encoding="utf-8") as fh:
        return obj_to_cfg(json.load(fh))


def save_cfg(g: Cfg, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(cfg_to_obj(g), fh, indent=2, sort_keys=True)
        fh.write("\n")
