from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from ytab.errors import CapExceeded
from ytab.rsk import (
    Permutation,
    column_insert_tableau,
    insertion_tableau,
    rs_pair,
    tableau_of_involution,
    z_set,
)
from ytab.shapes import count_syt
from ytab.tableaux import StandardTableau, enumerate_syt_n, shape_of, validate


perm_strategy = st.integers(min_value=0, max_value=7).flatmap(
    lambda n: st.permutations(range(1, n + 1)).map(Permutation)
)


def test_permutation_basics():
    p = Permutation([3, 1, 2])
    assert p.n == 3
    assert len(p) == 3
    assert p(1) == 3 and p(3) == 2
    assert str(p) == "3 1 2"
    assert Permutation.parse("3 1 2") == p
    assert Permutation.parse("") == Permutation(())
    assert Permutation.identity(4) == Permutation([1, 2, 3, 4])
    with pytest.raises(ValueError):
        Permutation([1, 1, 2])
    with pytest.raises(ValueError):
        Permutation([2, 3])
    with pytest.raises(ValueError):
        Permutation.parse("1 x")
    with pytest.raises(AttributeError):
        p.word = (1, 2, 3)


def test_inverse_and_compose():
    p = Permutation([3, 1, 2])
    assert p.inverse() == Permutation([2, 3, 1])
    assert p.compose(p.inverse()) == Permutation.identity(3)
    assert p.inverse().compose(p) == Permutation.identity(3)
    with pytest.raises(ValueError):
        p.compose(Permutation([1, 2]))


def test_involution_predicates():
    assert Permutation([2, 1, 3]).is_involution()
    assert not Permutation([3, 1, 2]).is_involution()
    assert Permutation([2, 1, 3]).fixed_points() == [3]
    assert Permutation.identity(3).fixed_points() == [1, 2, 3]


def test_rs_pair_worked_example():
    p, q = rs_pair(Permutation([3, 1, 2]))
    assert p == StandardTableau([[1, 2], [3]])
    assert q == StandardTableau([[1, 3], [2]])


def test_rs_pair_shapes_and_validity():
    for word in permutations(range(1, 6)):
        p, q = rs_pair(Permutation(word))
        assert validate(p) and validate(q)
        assert shape_of(p) == shape_of(q)
        assert insertion_tableau(Permutation(word)) == p


@given(perm_strategy)
@settings(max_examples=100, deadline=None)
def test_inverse_swaps_p_and_q(sigma):
    p, q = rs_pair(sigma)
    pi, qi = rs_pair(sigma.inverse())
    assert pi == q
    assert qi == p


def test_rs_is_injective_on_s4():
    pairs = {rs_pair(Permutation(w)) for w in permutations(range(1, 5))}
    assert len(pairs) == factorial(4)


def test_involution_iff_p_equals_q():
    for n in range(0, 6):
        for word in permutations(range(1, n + 1)):
            sigma = Permutation(word)
            p, q = rs_pair(sigma)
            assert (p == q) == sigma.is_involution()


def test_tableau_of_involution():
    t = tableau_of_involution(Permutation([2, 1, 3]))
    assert t == StandardTableau([[1, 3], [2]])
    with pytest.raises(ValueError, match="not an involution"):
        tableau_of_involution(Permutation([3, 1, 2]))


@given(perm_strategy)
@settings(max_examples=150, deadline=None)
def test_column_insertion_agrees_with_row_insertion(sigma):
    # right-to-left column insertion builds the same tableau as row insertion
    assert column_insert_tableau(sigma) == insertion_tableau(sigma)


Z_SET_CASES = [
    (StandardTableau([[1, 3], [2]]), [(2, 1, 3), (2, 3, 1)]),
    (StandardTableau([[1, 2], [3]]), [(1, 3, 2), (3, 1, 2)]),
    (
        StandardTableau([[1, 2, 5], [3, 4]]),
        [
            (3, 1, 4, 2, 5),
            (3, 1, 4, 5, 2),
            (3, 4, 1, 2, 5),
            (3, 4, 1, 5, 2),
            (3, 4, 5, 1, 2),
        ],
    ),
    (StandardTableau([[1, 2, 3]]), [(1, 2, 3)]),
    (StandardTableau([[1], [2], [3]]), [(3, 2, 1)]),
]


@pytest.mark.parametrize("t,expected", Z_SET_CASES)
def test_z_set_frozen_members(t, expected):
    members = z_set(t)
    assert [m.word for m in members] == expected


def test_z_set_sizes_and_round_trip():
    for k in range(1, 6):
        total = 0
        for t in enumerate_syt_n(k):
            members = z_set(t)
            total += len(members)
            assert len(members) == count_syt(shape_of(t))
            assert all(insertion_tableau(m) == t for m in members)
            # members come out in lexicographic word order
            assert [m.word for m in members] == sorted(m.word for m in members)
        assert total == factorial(k)


def test_z_set_rejects_invalid_and_oversized():
    with pytest.raises(ValueError, match="not a standard tableau"):
        z_set(StandardTableau([[2, 3], [1]]))
    big = StandardTableau([list(range(1, 11))])
    with pytest.raises(CapExceeded, match="3628800"):
        z_set(big)
    # an explicit cap loosens the default
    assert len(z_set(StandardTableau([list(range(1, 11))]), cap=10)) == 1
