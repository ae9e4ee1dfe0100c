from math import factorial

import pytest
from hypothesis import given, strategies as st

from ytab.shapes import (
    Cell,
    Partition,
    corners,
    count_syt,
    hook_length,
    is_subshape,
    partitions_of,
    remove_corner,
)


@st.composite
def partition_strategy(draw, max_n=20):
    n = draw(st.integers(min_value=0, max_value=max_n))
    parts = []
    remaining = n
    cap = n
    while remaining > 0:
        p = draw(st.integers(min_value=1, max_value=min(cap, remaining)))
        parts.append(p)
        cap = p
        remaining -= p
    return Partition(parts)


def test_partition_canonical_form():
    assert Partition([3, 2, 2]).parts == (3, 2, 2)
    assert Partition([3, 2, 0, 0]).parts == (3, 2)
    assert Partition().parts == ()
    assert Partition([5]).size == 5
    assert len(Partition([3, 1])) == 2
    assert Partition([3, 1])[0] == 3
    assert list(Partition([3, 1])) == [3, 1]


def test_partition_rejects_bad_parts():
    with pytest.raises(ValueError):
        Partition([2, 3])
    with pytest.raises(ValueError):
        Partition([3, -1])
    with pytest.raises(ValueError):
        Partition([2, 0, 1])


def test_partition_immutable_and_hashable():
    lam = Partition([2, 1])
    with pytest.raises(AttributeError):
        lam.parts = (3,)
    assert lam == Partition([2, 1, 0])
    assert hash(lam) == hash(Partition([2, 1]))
    assert lam != Partition([3])


def test_partition_parse_str_round_trip():
    assert Partition.parse("3,2,1") == Partition([3, 2, 1])
    assert str(Partition([3, 2, 1])) == "3,2,1"
    assert Partition.parse("") == Partition()
    assert Partition.parse(" 4,4 ") == Partition([4, 4])
    with pytest.raises(ValueError):
        Partition.parse("3,a")
    with pytest.raises(ValueError):
        Partition.parse("1,2")


def test_cell_str():
    assert str(Cell(1, 2)) == "(1,2)"
    assert Cell(2, 3).row == 2 and Cell(2, 3).col == 3


def test_contains_cell():
    lam = Partition([3, 1])
    assert lam.contains_cell(Cell(1, 3))
    assert lam.contains_cell(Cell(2, 1))
    assert not lam.contains_cell(Cell(2, 2))
    assert not lam.contains_cell(Cell(0, 1))
    assert not lam.contains_cell(Cell(3, 1))


PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_partitions_of_counts():
    for k, expected in enumerate(PARTITION_COUNTS):
        assert len(partitions_of(k)) == expected


def test_partitions_of_order_and_validity():
    ps = partitions_of(6)
    assert ps[0] == Partition([6])
    assert ps[-1] == Partition([1] * 6)
    assert len(set(ps)) == len(ps)
    assert all(p.size == 6 for p in ps)
    # descending lexicographic order on the part tuples
    assert all(a.parts > b.parts for a, b in zip(ps, ps[1:]))
    with pytest.raises(ValueError):
        partitions_of(-1)


def test_hook_length_grid():
    lam = Partition([2, 2, 1])
    hooks = {
        (1, 1): 4,
        (1, 2): 2,
        (2, 1): 3,
        (2, 2): 1,
        (3, 1): 1,
    }
    for (r, c), h in hooks.items():
        assert hook_length(lam, Cell(r, c)) == h
    with pytest.raises(ValueError):
        hook_length(lam, Cell(1, 3))


def test_count_syt_known_values():
    assert count_syt(Partition()) == 1
    assert count_syt(Partition([4])) == 1
    assert count_syt(Partition([1, 1, 1])) == 1
    assert count_syt(Partition([2, 1])) == 2
    assert count_syt(Partition([2, 2])) == 2
    assert count_syt(Partition([3, 2])) == 5
    assert count_syt(Partition([2, 2, 1])) == 5
    assert count_syt(Partition([3, 2, 1])) == 16


@given(partition_strategy(max_n=25))
def test_count_syt_corner_recurrence(lam):
    # f^lambda equals the sum of f over all single-corner removals
    if lam.size == 0:
        assert count_syt(lam) == 1
        return
    assert count_syt(lam) == sum(count_syt(remove_corner(lam, c)) for c in corners(lam))


@given(st.integers(min_value=0, max_value=10))
def test_count_syt_parseval(k):
    assert sum(count_syt(lam) ** 2 for lam in partitions_of(k)) == factorial(k)


def test_corners():
    assert corners(Partition([4, 2, 2, 1])) == [
        Cell(1, 4),
        Cell(3, 2),
        Cell(4, 1),
    ]
    assert corners(Partition([3])) == [Cell(1, 3)]
    assert corners(Partition()) == []


def test_remove_corner():
    lam = Partition([4, 2, 2, 1])
    assert remove_corner(lam, Cell(3, 2)) == Partition([4, 2, 1, 1])
    assert remove_corner(lam, Cell(4, 1)) == Partition([4, 2, 2])
    with pytest.raises(ValueError):
        remove_corner(lam, Cell(2, 2))
    with pytest.raises(ValueError):
        remove_corner(lam, Cell(1, 1))


def test_is_subshape():
    assert is_subshape(Partition([2, 1]), Partition([3, 2]))
    assert is_subshape(Partition(), Partition([1]))
    assert is_subshape(Partition([2, 2]), Partition([2, 2]))
    assert not is_subshape(Partition([3, 1]), Partition([2, 2]))
    assert not is_subshape(Partition([1, 1, 1]), Partition([3, 2]))


@given(partition_strategy(max_n=15))
def test_corner_removal_is_subshape(lam):
    for c in corners(lam):
        mu = remove_corner(lam, c)
        assert is_subshape(mu, lam)
        assert mu.size == lam.size - 1
