"""Boolean matrix semiring over automaton transition graphs.

Matrices are bit-packed: row i is a single int whose bit j is entry (i, j).
Products OR together rows selected by set bits, so the inner loops are
word-parallel.  All values are immutable and hashable, which lets the
eventually-periodic power orbit of a matrix be memoized once and reused by
every construction that walks matrix powers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .automata import Dfa


@dataclass(frozen=True)
class BoolMatrix:
    """Square boolean matrix; rows[i] holds row i with bit j = entry (i, j)."""

    size: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(self.rows))
        if self.size <= 0:
            raise ValueError("matrix size must be positive")
        if len(self.rows) != self.size:
            raise ValueError("row count does not match size")
        mask = (1 << self.size) - 1
        for r in self.rows:
            if r < 0 or r & ~mask:
                raise ValueError("row has bits outside the matrix width")

    @staticmethod
    def identity(n: int) -> "BoolMatrix":
        return BoolMatrix(n, tuple(1 << i for i in range(n)))

    @staticmethod
    def zero(n: int) -> "BoolMatrix":
        return BoolMatrix(n, (0,) * n)

    @staticmethod
    def from_entries(n: int, entries) -> "BoolMatrix":
        rows = [0] * n
        for i, j in entries:
            rows[i] |= 1 << j
        return BoolMatrix(n, tuple(rows))

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def __or__(self, other: "BoolMatrix") -> "BoolMatrix":
        if other.size != self.size:
            raise ValueError("dimension mismatch")
        return BoolMatrix(self.size, tuple(a | b for a, b in zip(self.rows, other.rows)))

    def __matmul__(self, other: "BoolMatrix") -> "BoolMatrix":
        """Boolean (OR of AND) matrix product."""
        if other.size != self.size:
            raise ValueError("dimension mismatch")
        orows = other.rows
        out = []
        for r in self.rows:
            acc = 0
            bits = r
            while bits:
                low = bits & -bits
                acc |= orows[low.bit_length() - 1]
                bits ^= low
            out.append(acc)
        return BoolMatrix(self.size, tuple(out))

    def __pow__(self, k: int) -> "BoolMatrix":
        return mat_pow(self, k)

    def to_lines(self) -> list[str]:
        """Rows as 0/1 strings, column 0 leftmost (debug printing)."""
        return ["".join(str((r >> j) & 1) for j in range(self.size)) for r in self.rows]


@dataclass(frozen=True)
class BoolVector:
    """Boolean row vector of width size, packed into the int bits."""

    size: int
    bits: int

    def __post_init__(self) -> None:
        if self.size <= 0:
            raise ValueError("vector size must be positive")
        if self.bits < 0 or self.bits & ~((1 << self.size) - 1):
            raise ValueError("bits outside the vector width")

    @staticmethod
    def unit(n: int, i: int) -> "BoolVector":
        if not 0 <= i < n:
            raise ValueError("unit position out of range")
        return BoolVector(n, 1 << i)

    @staticmethod
    def from_indices(n: int, indices) -> "BoolVector":
        bits = 0
        for i in indices:
            if not 0 <= i < n:
                raise ValueError("index out of range")
            bits |= 1 << i
        return BoolVector(n, bits)

    def indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.size) if (self.bits >> i) & 1)

    def __matmul__(self, m: BoolMatrix) -> "BoolVector":
        return vec_mat_mul(self, m)


def mat_mul(a: BoolMatrix, b: BoolMatrix) -> BoolMatrix:
    return a @ b


def vec_mat_mul(v: BoolVector, m: BoolMatrix) -> BoolVector:
    """Row vector times matrix: OR of the rows selected by v's set bits."""
    if v.size != m.size:
        raise ValueError("dimension mismatch")
    acc = 0
    bits = v.bits
    rows = m.rows
    while bits:
        low = bits & -bits
        acc |= rows[low.bit_length() - 1]
        bits ^= low
    return BoolVector(v.size, acc)


def mat_vec_mul(m: BoolMatrix, v: BoolVector) -> BoolVector:
    """Matrix times column vector: bit i set iff row i meets v."""
    if v.size != m.size:
        raise ValueError("dimension mismatch")
    acc = 0
    for i, r in enumerate(m.rows):
        if r & v.bits:
            acc |= 1 << i
    return BoolVector(v.size, acc)


def dot(v: BoolVector, w: BoolVector) -> int:
    """Boolean inner product: 1 iff the vectors share a set bit."""
    if v.size != w.size:
        raise ValueError("dimension mismatch")
    return 1 if v.bits & w.bits else 0


@dataclass(frozen=True)
class PowerOrbit:
    """The eventually periodic power sequence of a boolean matrix.

    powers lists A^0 .. A^(index+period-1), which are pairwise distinct;
    A^(index+period) = A^index, so every higher power folds back into the
    listed range.
    """

    index: int
    period: int
    powers: tuple[BoolMatrix, ...]

    def power(self, k: int) -> BoolMatrix:
        if k < 0:
            raise ValueError("exponent must be non-negative")
        if k < len(self.powers):
            return self.powers[k]
        return self.powers[self.index + (k - self.index) % self.period]


@lru_cache(maxsize=None)
def power_orbit(a: BoolMatrix) -> PowerOrbit:
    """Minimal (index, period) with A^(index+period) = A^index, plus all
    distinct powers, found by iterating products until the first repeat."""
    powers: list[BoolMatrix] = []
    seen: dict[BoolMatrix, int] = {}
    cur = BoolMatrix.identity(a.size)
    while cur not in seen:
        seen[cur] = len(powers)
        powers.append(cur)
        cur = cur @ a
    first = seen[cur]
    return PowerOrbit(index=first, period=len(powers) - first, powers=tuple(powers))


def mat_pow(a: BoolMatrix, k: int) -> BoolMatrix:
    """A^k with A^0 = I; k may be arbitrarily large since it is reduced
    through the memoized power orbit."""
    return power_orbit(a).power(k)


def incidence_matrices(d: "Dfa") -> tuple[tuple[BoolMatrix, ...], BoolMatrix]:
    """Per-symbol incidence matrices of a complete DFA plus their entrywise OR.

    Matrix c has a 1 at (i, j) iff the automaton moves from state i to state j
    on symbol c; completeness makes each of these one-hot per row.
    """
    n = d.size
    per_symbol = []
    union_rows = [0] * n
    for c in range(len(d.alphabet)):
        rows = []
        for q in range(n):
            bit = 1 << d.delta[q][c]
            rows.append(bit)
            union_rows[q] |= bit
        per_symbol.append(BoolMatrix(n, tuple(rows)))
    return tuple(per_symbol), BoolMatrix(n, tuple(union_rows))
