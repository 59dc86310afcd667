import itertools
import random

import numpy as np
import pytest

from conftest import oracle_group

from quandle_euler import (
    NotSquare,
    Permutation,
    Q1Violation,
    Q2Violation,
    Q3Violation,
    SearchBudgetExceeded,
    close,
    compose,
    cycle_quandle,
    dihedral,
    direct_product,
    discrete_sphere,
    displacement_generators,
    euler_characteristic,
    find_automorphism,
    free_union,
    identity,
    inner_generators,
    inverse,
    is_connected,
    is_homogeneous,
    is_trivial,
    orbits,
    point_symmetry,
    relabel,
    trivial,
    validate,
)

R3_TABLE = [[0, 2, 1], [2, 1, 0], [1, 0, 2]]


def test_r3_table_by_hand():
    # s_a(b) = 2a - b mod 3
    assert [[(2 * a - b) % 3 for b in range(3)] for a in range(3)] == R3_TABLE


def test_validate_examples():
    X = validate(R3_TABLE)
    assert X.size == 3
    assert X.inv_table.tolist() == R3_TABLE  # involutions
    with pytest.raises(Q1Violation) as err:
        validate([[1, 0], [0, 1]])
    assert err.value.element == 0
    assert is_trivial(validate([[0, 1], [0, 1]]))


def test_validate_q2_q3_and_shape():
    with pytest.raises(Q2Violation):
        validate([[0, 0, 0], [0, 1, 2], [0, 1, 2]])
    # rows are bijections fixing the centre, but not self-distributive
    with pytest.raises(Q3Violation):
        validate([[0, 2, 1], [2, 1, 0], [0, 1, 2]])
    with pytest.raises(NotSquare):
        validate([[0, 1]])
    with pytest.raises(NotSquare):
        validate([[0, 5], [0, 1]])


def test_q3_witness_is_real():
    t = [[0, 2, 1], [2, 1, 0], [0, 1, 2]]
    with pytest.raises(Q3Violation) as err:
        validate(t)
    x, y, z = err.value.witness
    assert t[x][t[y][z]] != t[t[x][y]][t[x][z]]


def test_point_symmetry():
    assert point_symmetry(dihedral(5), 0).to_list() == [0, 4, 3, 2, 1]
    assert point_symmetry(trivial(4), 2) == identity(4)
    DS2 = discrete_sphere(2)
    s = point_symmetry(DS2, 0)  # +e1
    assert s(0) == 0 and s(1) == 1
    assert s(2) == 3 and s(3) == 2 and s(4) == 5 and s(5) == 4
    with pytest.raises(IndexError):
        point_symmetry(DS2, 6)


def test_inner_generators():
    assert inner_generators(trivial(3)) == [identity(3)]
    assert len(inner_generators(discrete_sphere(2))) == 3
    assert len(inner_generators(dihedral(3))) == 3


def test_displacement_generators():
    assert displacement_generators(trivial(5)) == []
    assert displacement_generators(trivial(1)) == []
    # s_a s_b^{-1}: c -> 2a - (2b - c) = c + 2(a - b)
    expected = {Permutation([(c + 2 * k) % 3 for c in range(3)]) for k in (1, 2)}
    assert set(displacement_generators(dihedral(3))) == expected


def test_is_trivial():
    assert is_trivial(trivial(7))
    assert is_trivial(dihedral(2))
    assert not is_trivial(dihedral(3))


def test_is_connected():
    assert is_connected(dihedral(5))
    assert not is_connected(dihedral(4))
    assert not is_connected(trivial(2))
    assert orbits(4, inner_generators(dihedral(4)))[0] == {0, 2}


def test_is_homogeneous():
    for n in range(1, 5):
        assert is_homogeneous(trivial(n))
    assert is_homogeneous(cycle_quandle(3))
    assert not is_homogeneous(free_union(trivial(1), dihedral(3)))
    assert is_homogeneous(dihedral(4))  # x -> x+1 is an automorphism


def test_find_automorphism_returns_automorphism():
    X = dihedral(6)
    f = find_automorphism(X, 0, 1)
    t = X.table
    assert f(0) == 1
    for x, y in itertools.product(range(6), repeat=2):
        assert f(t[x, y]) == t[f(x), f(y)]


def test_free_union_not_homogeneous_by_exhaustion():
    # independent check: try all 24 bijections of trivial(1) u R3
    t = free_union(trivial(1), dihedral(3)).to_lists()
    autos = []
    for p in itertools.permutations(range(4)):
        if all(p[t[x][y]] == t[p[x]][p[y]] for x in range(4) for y in range(4)):
            autos.append(p)
    assert {p[0] for p in autos} == {0}


def test_homogeneity_budget():
    with pytest.raises(SearchBudgetExceeded):
        is_homogeneous(free_union(dihedral(3), discrete_sphere(1)), budget=1)


def test_direct_product():
    assert direct_product(trivial(2), trivial(3)) == trivial(6)
    X = direct_product(dihedral(3), dihedral(3))
    assert X.size == 9 and is_connected(X)
    assert direct_product(dihedral(4), cycle_quandle(2)).size == 16
    # (a, b) at a*n2 + b
    t = direct_product(dihedral(3), dihedral(5)).table
    assert t[1 * 5 + 2, 2 * 5 + 4] == ((2 - 2) % 3) * 5 + (4 - 4) % 5


def test_free_union():
    assert free_union(trivial(1), trivial(1)) == trivial(2)
    X = free_union(dihedral(3), dihedral(3))
    assert X.size == 6 and not is_connected(X)
    s0 = point_symmetry(X, 0)
    assert [s0(i) for i in (3, 4, 5)] == [3, 4, 5]
    assert X.table[3:, 3:].tolist() == (np.array(R3_TABLE) + 3).tolist()


def test_labels_carry_through():
    X = free_union(discrete_sphere(1), trivial(1))
    assert X.labels[:4] == ("+e1", "-e1", "+e2", "-e2")
    assert X.label(4) == "0"


# structural laws on the catalogue of small families

def test_orbits_inn_and_dis_agree(small_quandle):
    _, X = small_quandle
    inn = orbits(X.size, inner_generators(X))
    dis = orbits(X.size, displacement_generators(X) or [identity(X.size)])
    assert inn == dis


def test_conjugation_law(small_quandle):
    _, X = small_quandle
    inn = close(inner_generators(X), degree=X.size)
    assert not inn.truncated
    rows = [point_symmetry(X, x) for x in range(X.size)]
    for g in inn.elements:
        gi = inverse(g)
        for x in range(X.size):
            assert compose(g, compose(rows[x], gi)) == rows[g(x)]


def test_closure_matches_naive_oracle(small_quandle):
    _, X = small_quandle
    res = close(inner_generators(X), degree=X.size)
    assert {p.images for p in res.elements} == oracle_group(X.to_lists(), X.size)


def test_relabeling_invariance(small_quandle):
    name, X = small_quandle
    rng = random.Random(hash(name) & 0xFFFF)
    chi = euler_characteristic(X).value
    conn = is_connected(X)
    hom = is_homogeneous(X)
    for _ in range(5):
        pi = list(range(X.size))
        rng.shuffle(pi)
        Y = relabel(X, pi)
        assert euler_characteristic(Y).value == chi
        assert is_connected(Y) == conn
        assert is_homogeneous(Y) == hom


def test_relabel_definition():
    X = dihedral(5)
    pi = Permutation([2, 0, 4, 1, 3])
    Y = relabel(X, pi)
    for x in range(5):
        for y in range(5):
            assert Y.table[pi(x), pi(y)] == pi(X.table[x, y])
