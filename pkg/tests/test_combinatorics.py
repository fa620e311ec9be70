from functools import lru_cache

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jackpieri.combinatorics import (
    complement,
    contains,
    dominance_leq,
    format_partition,
    format_subset,
    is_partition,
    parse_partition,
    partitions_of,
    partitions_up_to,
    shift_by_subset,
    staircase,
    subsets,
)
from jackpieri.errors import WeightMismatch


@lru_cache(maxsize=None)
def count_partitions(n, r, cap):
    """Partitions of n into at most r parts each <= cap."""
    if n == 0:
        return 1
    if r == 0:
        return 0
    return sum(count_partitions(n - p, r - 1, p) for p in range(1, min(n, cap) + 1))


@pytest.mark.parametrize("r", [1, 2, 3, 4])
@pytest.mark.parametrize("n", range(9))
def test_partition_counts(n, r):
    parts = partitions_of(n, r)
    assert len(parts) == count_partitions(n, r, n)
    assert len(set(parts)) == len(parts)
    assert all(is_partition(p) and sum(p) == n and len(p) == r for p in parts)
    assert list(parts) == sorted(parts, reverse=True)


def test_enumeration_order():
    assert partitions_up_to(2, 2) == [(0, 0), (1, 0), (2, 0), (1, 1)]
    assert subsets(3) == ((), (0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2))
    assert complement((1,), 3) == (0, 2)


parts = st.integers(1, 3).flatmap(lambda r: st.integers(0, 7).flatmap(lambda n: st.sampled_from(partitions_of(n, r))))


@given(parts)
def test_dominance_is_reflexive_and_refines_lex(m):
    assert dominance_leq(m, m)
    for k in partitions_of(sum(m), len(m)):
        if dominance_leq(k, m) and dominance_leq(m, k):
            assert k == m
        if dominance_leq(k, m):
            assert k <= m


@given(st.integers(0, 6), st.integers(1, 3))
def test_dominance_transitive(n, r):
    ps = partitions_of(n, r)
    for a in ps:
        for b in ps:
            for c in ps:
                if dominance_leq(a, b) and dominance_leq(b, c):
                    assert dominance_leq(a, c)


def test_dominance_weight_mismatch():
    with pytest.raises(WeightMismatch):
        dominance_leq((1, 0), (2, 0))


@given(parts)
def test_shift_round_trip(m):
    for J in subsets(len(m)):
        y, ok = shift_by_subset(m, J, +1)
        assert shift_by_subset(y, J, -1)[0] == m
        assert ok == is_partition(y)
        if ok:
            assert contains(m, y)


def test_formatting():
    assert staircase(3) == (2, 1, 0)
    assert format_partition((2, 1, 0)) == "2,1,0"
    assert parse_partition("2,1", 3) == (2, 1, 0)
    assert format_subset((0, 2)) == "{1,3}"
    with pytest.raises(ValueError):
        parse_partition("1,1,1", 2)
