from __future__ import annotations

from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kneserlab.combin import multinomial
from kneserlab.splits import (
    SplitVector,
    c_of,
    cnd,
    n_prime,
    one_four_class_size,
    optimal_splits,
    optimal_value,
    optimal_vectors,
    ordered_partitions,
    star_pair_count,
    two_twos_class_size,
)

from oracles import brute_best_splits


@pytest.mark.parametrize("k", range(2, 13))
def test_optimal_splits_match_brute_force(k):
    top, shapes = brute_best_splits(k)
    got = sorted(tuple(s.components) for s in optimal_splits(k))
    assert got == shapes
    assert optimal_value(k) == top


@pytest.mark.parametrize("k,expected", [(4, (2, 6, 4)), (5, (2, 20, 6)), (6, (2, 20, 9)), (7, (3, 630, 12)), (9, (3, 1680, 27))])
def test_cnd_values(k, expected):
    assert cnd(k) == expected


@pytest.mark.parametrize("k", range(2, 13))
def test_cnd_consistent_with_splits(k):
    c, N, D = cnd(k)
    assert c == c_of(k) == max(s.c for s in optimal_splits(k))
    assert D == optimal_value(k)
    assert N == star_pair_count(k, c)


def test_rejects_small_k():
    for k in (0, 1):
        with pytest.raises(ValueError):
            optimal_splits(k)
        with pytest.raises(ValueError):
            cnd(k)


def test_split_vector_validation():
    assert SplitVector(7, (2, 3, 2)).components == (3, 2, 2)
    with pytest.raises(ValueError):
        SplitVector(5, (3, 3))
    with pytest.raises(ValueError):
        SplitVector(5, (3, 0))
    assert SplitVector(7, (3, 2, 2)).arrangements() == [(2, 2, 3), (2, 3, 2), (3, 2, 2)]


def test_optimal_vectors_k7():
    assert optimal_vectors(7, 3) == [(2, 2, 3), (2, 3, 2), (3, 2, 2)]
    assert optimal_vectors(7, 2) == [(3, 4), (4, 3)]


@given(st.lists(st.integers(1, 3), min_size=1, max_size=3))
def test_ordered_partition_count_is_multinomial(s):
    k = sum(s)
    parts = list(ordered_partitions(s, k))
    assert len(parts) == len(set(parts)) == multinomial(k, s)
    for P in parts:
        assert sorted(c for block in P for c in block) == list(range(1, k + 1))
        assert [len(b) for b in P] == list(s)


def test_ordered_partitions_rejects_bad_sum():
    with pytest.raises(ValueError):
        list(ordered_partitions((2, 2), 5))


@pytest.mark.parametrize("k", [4, 7, 10, 13])
def test_class_sizes(k):
    c = c_of(k)
    assert two_twos_class_size(k) == cnd(k)[1]
    four = [s for s in optimal_vectors(k, c - 1) if 4 in s]
    assert one_four_class_size(k) == sum(multinomial(k, s) for s in four)
    assert one_four_class_size(k) == n_prime(k)
    assert two_twos_class_size(k) == 3 * c * one_four_class_size(k)


def test_n_prime_rejects_other_residues():
    with pytest.raises(ValueError):
        n_prime(6)
    assert n_prime(4) == factorial(4) // 24
