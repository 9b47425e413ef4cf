"""Partition enumeration against a brute-force oracle."""

from itertools import product

import pytest
from hypothesis import given, strategies as st

from chernbound import (
    all_partitions_up_to,
    check_partition,
    enumerate_partitions,
    format_partition,
    parse_partition,
    partition_count,
    partition_distance,
)


def brute_force_partitions(d: int, n: int) -> set[tuple[int, ...]]:
    """Every composition of d with entries <= n, sorted and deduplicated."""
    found = set()
    for length in range(1, d + 1):
        for combo in product(range(1, n + 1), repeat=length):
            if sum(combo) == d:
                found.add(tuple(sorted(combo, reverse=True)))
    return found


def test_known_example():
    assert enumerate_partitions(4, 4) == [
        (4,),
        (3, 1),
        (2, 2),
        (2, 1, 1),
        (1, 1, 1, 1),
    ]


def test_matches_brute_force_small():
    for n in range(1, 7):
        for d in range(1, n + 1):
            listed = enumerate_partitions(d, n)
            assert len(listed) == len(set(listed))
            assert set(listed) == brute_force_partitions(d, n)


def test_lexicographically_decreasing():
    for n in range(1, 7):
        for d in range(1, n + 1):
            listed = enumerate_partitions(d, n)
            assert listed == sorted(listed, reverse=True)


def test_every_partition_is_valid():
    for lam in enumerate_partitions(6, 6):
        assert check_partition(lam) == lam
        assert sum(lam) == 6


def test_counts():
    # p(1)..p(10)
    expected = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    for n, count in enumerate(expected, start=1):
        assert partition_count(n) == count
        assert len(enumerate_partitions(n, n)) == count


def test_all_partitions_up_to():
    listed = all_partitions_up_to(3)
    assert listed == [(1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1)]


def test_distance():
    assert partition_distance(()) == 0
    assert partition_distance((1, 1, 1)) == 0
    assert partition_distance((2,)) == 1
    assert partition_distance((3, 2, 1)) == 3


def test_rejects_bad_arguments():
    with pytest.raises(ValueError):
        enumerate_partitions(0, 3)
    with pytest.raises(ValueError):
        enumerate_partitions(3, 0)
    with pytest.raises(ValueError):
        enumerate_partitions(5, 4)
    with pytest.raises(ValueError):
        check_partition((1, 2))
    with pytest.raises(ValueError):
        check_partition((2, 0))
    with pytest.raises(ValueError):
        check_partition((2, -1))


def test_format_parse_round_trip():
    assert format_partition((2, 1, 1)) == "2,1,1"
    assert parse_partition("2,1,1") == (2, 1, 1)
    assert parse_partition("") == ()
    assert parse_partition(" 3 ") == (3,)
    with pytest.raises(ValueError):
        parse_partition("1,2")
    with pytest.raises(ValueError):
        parse_partition("a,b")


@given(st.integers(min_value=1, max_value=8))
def test_round_trip_every_partition(n):
    for d in range(1, n + 1):
        for lam in enumerate_partitions(d, n):
            assert parse_partition(format_partition(lam)) == lam
