"""Boolean matrix semiring: products, powers, orbits, incidence."""

import random

import pytest

from aplang.automata import Alphabet, Dfa
from aplang.boolmat import (
    BoolMatrix,
    BoolVector,
    dot,
    incidence_matrices,
    mat_mul,
    mat_pow,
    mat_vec_mul,
    power_orbit,
    vec_mat_mul,
)
from aplang.verification import random_dfa

from conftest import ab_star_dfa, universal_dfa


def naive_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n = len(a)
    return [
        [1 if any(a[i][l] and b[l][j] for l in range(n)) else 0 for j in range(n)]
        for i in range(n)
    ]


def to_lists(m: BoolMatrix) -> list[list[int]]:
    return [[m.entry(i, j) for j in range(m.size)] for i in range(m.size)]


def from_lists(rows: list[list[int]]) -> BoolMatrix:
    return BoolMatrix(
        len(rows),
        tuple(sum(bit << j for j, bit in enumerate(row)) for row in rows),
    )


def test_identity_is_neutral():
    a = from_lists([[1, 1, 0], [0, 0, 1], [1, 0, 0]])
    i = BoolMatrix.identity(3)
    assert a @ i == a
    assert i @ a == a


def test_permutation_times_inverse_is_identity():
    p = BoolMatrix.from_entries(3, [(0, 1), (1, 2), (2, 0)])
    p_inv = BoolMatrix.from_entries(3, [(1, 0), (2, 1), (0, 2)])
    assert p @ p_inv == BoolMatrix.identity(3)


def test_nilpotent_chain_square():
    n = BoolMatrix.from_entries(3, [(0, 1), (1, 2)])
    sq = n @ n
    assert sq == BoolMatrix.from_entries(3, [(0, 2)])


def test_dim_mismatch_rejected():
    a = BoolMatrix.identity(2)
    b = BoolMatrix.identity(3)
    with pytest.raises(ValueError):
        mat_mul(a, b)
    with pytest.raises(ValueError):
        vec_mat_mul(BoolVector(3, 0b101), a)
    with pytest.raises(ValueError):
        dot(BoolVector(2, 1), BoolVector(3, 1))


def test_unit_vector_picks_row():
    a = from_lists([[0, 1, 1], [1, 0, 0], [0, 0, 1]])
    assert vec_mat_mul(BoolVector.unit(3, 0), a) == BoolVector(3, 0b110)
    assert vec_mat_mul(BoolVector.unit(3, 1), a) == BoolVector(3, 0b001)


def test_dot_with_zero_vector():
    assert dot(BoolVector(4, 0b1010), BoolVector(4, 0)) == 0
    assert dot(BoolVector(4, 0b1010), BoolVector(4, 0b0010)) == 1


def test_ab_star_round_trip_through_letter_matrices():
    # stepping a then b from the start of (ab)* returns to the start state
    d = ab_star_dfa()
    mats, _ = incidence_matrices(d)
    e0 = BoolVector.unit(d.size, d.start)
    assert vec_mat_mul(vec_mat_mul(e0, mats[0]), mats[1]) == e0


def test_mat_vec_mul_column_product():
    a = from_lists([[0, 1], [1, 0]])
    v = BoolVector(2, 0b01)  # bit 0 set
    # row i meets v iff entry (i, 0) is 1
    assert mat_vec_mul(a, v) == BoolVector(2, 0b10)


def test_power_basics():
    a = from_lists([[0, 1], [1, 1]])
    assert mat_pow(a, 0) == BoolMatrix.identity(2)
    p = BoolMatrix.from_entries(2, [(0, 1), (1, 0)])
    assert mat_pow(p, 2) == BoolMatrix.identity(2)
    assert mat_pow(p, 3) == p
    with pytest.raises(ValueError):
        mat_pow(a, -1)


def test_orbit_identity():
    orbit = power_orbit(BoolMatrix.identity(3))
    assert (orbit.index, orbit.period) == (0, 1)


def test_orbit_two_cycle():
    p = BoolMatrix.from_entries(2, [(0, 1), (1, 0)])
    orbit = power_orbit(p)
    assert (orbit.index, orbit.period) == (0, 2)


def test_orbit_nilpotent():
    n = BoolMatrix.from_entries(2, [(0, 1)])
    orbit = power_orbit(n)
    # n^2 = 0 and stays there
    assert (orbit.index, orbit.period) == (2, 1)


def test_orbit_reduction_of_large_exponents():
    rng = random.Random(5)
    for _ in range(20):
        d = random_dfa(rng, 4)
        _, m = incidence_matrices(d)
        orbit = power_orbit(m)
        span = orbit.index + orbit.period
        assert mat_pow(m, span + 3) == mat_pow(m, orbit.index + (span + 3 - orbit.index) % orbit.period)
        assert mat_pow(m, 10**30 * orbit.period + orbit.index) == mat_pow(m, orbit.index)


def test_mat_pow_matches_repeated_multiplication():
    rng = random.Random(6)
    for _ in range(15):
        d = random_dfa(rng, 4)
        _, m = incidence_matrices(d)
        orbit = power_orbit(m)
        acc = BoolMatrix.identity(m.size)
        for k in range(orbit.index + orbit.period + 5):
            assert mat_pow(m, k) == acc
            acc = acc @ m


def test_orbit_matches_independent_brute_force():
    # list powers with a naive triple-loop product until the first repeat
    rng = random.Random(7)
    for _ in range(25):
        n = rng.randint(1, 4)
        rows = [[rng.randint(0, 1) for _ in range(n)] for _ in range(n)]
        m = from_lists(rows)
        seen: list[list[list[int]]] = []
        cur = to_lists(BoolMatrix.identity(n))
        while cur not in seen:
            seen.append(cur)
            cur = naive_mul(cur, to_lists(m))
        first = seen.index(cur)
        orbit = power_orbit(m)
        assert orbit.index == first
        assert orbit.period == len(seen) - first
        assert orbit.index + orbit.period == len(seen)
        assert [to_lists(p) for p in orbit.powers] == seen


def test_path_algebra_soundness():
    # (M^k)[i][j] = 1 iff a length-k path exists, by independent set expansion
    rng = random.Random(8)
    for _ in range(20):
        d = random_dfa(rng, 5)
        _, m = incidence_matrices(d)
        adj = [set(row) for row in d.delta]
        for i in range(d.size):
            reach = {i}
            for k in range(7):
                mk = mat_pow(m, k)
                assert {j for j in range(d.size) if mk.entry(i, j)} == reach
                reach = {t for q in reach for t in adj[q]}


def test_incidence_one_hot_rows():
    rng = random.Random(9)
    for _ in range(20):
        d = random_dfa(rng, 5)
        mats, union = incidence_matrices(d)
        for mc in mats:
            for row in mc.rows:
                assert bin(row).count("1") == 1
        for q in range(d.size):
            assert union.rows[q] == 0 or bin(union.rows[q]).count("1") >= 1
        # union is the entrywise OR of the letter matrices
        acc = BoolMatrix.zero(d.size)
        for mc in mats:
            acc = acc | mc
        assert acc == union
        # one-hot vectors stay one-hot under a letter matrix
        for q in range(d.size):
            for mc in mats:
                out = vec_mat_mul(BoolVector.unit(d.size, q), mc)
                assert bin(out.bits).count("1") == 1


def test_incidence_universal_dfa():
    d = universal_dfa(Alphabet(("a", "b")))
    mats, union = incidence_matrices(d)
    assert all(mc == BoolMatrix(1, (1,)) for mc in mats)
    assert union == BoolMatrix(1, (1,))


def test_incidence_fan_in_example():
    # two letters both send state 0 to state 1
    ab = Alphabet(("a", "b"))
    d = Dfa.build(ab, 2, 0, [1], {(0, 0): 1, (0, 1): 1, (1, 0): 1, (1, 1): 1})
    _, union = incidence_matrices(d)
    assert union.rows[0] == 0b010


def test_matrix_validation():
    with pytest.raises(ValueError):
        BoolMatrix(2, (1,))
    with pytest.raises(ValueError):
        BoolMatrix(2, (4, 0))
    with pytest.raises(ValueError):
        BoolMatrix(0, ())


def test_to_lines_debug_rendering():
    m = BoolMatrix.from_entries(3, [(0, 1), (2, 2)])
    assert m.to_lines() == ["010", "000", "001"]
