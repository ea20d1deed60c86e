"""The integer split program: maximize s_1*...*s_c subject to s_1+...+s_c <= k.

Optimal multisets, their labeled arrangements over cover slots, the
constants c(k), N(k), D(k), and ordered color partitions with given block
sizes.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from math import factorial, prod
from typing import Iterator, Sequence

from .combin import binom, multinomial


@dataclass(frozen=True, order=True)
class SplitVector:
    """Positive parts with sum at most k; stored as a non-increasing multiset."""

    k: int
    components: tuple[int, ...]

    def __post_init__(self) -> None:
        comps = tuple(sorted(self.components, reverse=True))
        object.__setattr__(self, "components", comps)
        if any(s < 1 for s in comps):
            raise ValueError(f"split parts must be positive: {comps}")
        if sum(comps) > self.k:
            raise ValueError(f"split {comps} exceeds budget k={self.k}")

    @property
    def c(self) -> int:
        return len(self.components)

    @property
    def value(self) -> int:
        return prod(self.components)

    def arrangements(self) -> list[tuple[int, ...]]:
        """Distinct assignments of the parts to labeled slots 1..c, sorted."""
        return sorted(set(permutations(self.components)))


ColorPartition = tuple[tuple[int, ...], ...]


def _check_k(k: int) -> None:
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")


def optimal_splits(k: int) -> list[SplitVector]:
    """Optimal multisets, closed form by residue of k mod 3."""
    _check_k(k)
    q, res = divmod(k, 3)
    if res == 0:
        shapes = [(3,) * q]
    elif res == 1:
        shapes = [(3,) * (q - 1) + (2, 2), (3,) * (q - 1) + (4,)]
    else:
        shapes = [(3,) * q + (2,)]
    return sorted(SplitVector(k, s) for s in shapes)


def optimal_value(k: int) -> int:
    return optimal_splits(k)[0].value


def c_of(k: int) -> int:
    return -(-k // 3)


def optimal_vectors(k: int, c: int | None = None) -> list[tuple[int, ...]]:
    """Labeled optimal vectors (one per slot assignment), optionally of length c."""
    out = []
    for sv in optimal_splits(k):
        if c is None or sv.c == c:
            out.extend(sv.arrangements())
    return sorted(out)


def cnd(k: int) -> tuple[int, int, int]:
    """Return (c(k), N(k), D(k)) from the residue-class closed forms."""
    _check_k(k)
    c = c_of(k)
    kf = factorial(k)
    res = k % 3
    if res == 0:
        N = kf // 6 ** (k // 3)
        D = 3 ** (k // 3)
    elif res == 1:
        N = binom(c, 2) * kf // (4 * 6 ** (c - 2))
        D = 4 * 3 ** (c - 2)
    else:
        N = c * kf // (2 * 6 ** (k // 3))
        D = 2 * 3 ** (k // 3)
    return c, N, D


def n_prime(k: int) -> int:
    """Star-pair count of the (3,...,3,4) shape over c(k)-1 labeled slots."""
    _check_k(k)
    if k % 3 != 1 or k < 4:
        raise ValueError("only defined for k = 1 mod 3, k >= 4")
    q = k // 3
    return q * factorial(k) // (factorial(4) * 6 ** (q - 1))


def star_pair_count(k: int, c: int) -> int:
    """Number of (labeled optimal vector of length c, ordered partition) pairs."""
    return sum(multinomial(k, s) for s in optimal_vectors(k, c) if sum(s) == k)


def ordered_partitions(s: Sequence[int], k: int) -> Iterator[ColorPartition]:
    """Every ordered partition of [k] whose i-th block has s_i colors.

    Blocks are sorted tuples; enumeration order is lexicographic in the
    choice of each successive block.
    """
    s = tuple(s)
    if sum(s) != k:
        raise ValueError(f"block sizes {s} must sum to k={k}")
    if any(x < 1 for x in s):
        raise ValueError(f"block sizes must be positive: {s}")

    def rec(i: int, rest: tuple[int, ...]) -> Iterator[ColorPartition]:
        if i == len(s):
            yield ()
            return
        for block in combinations(rest, s[i]):
            left = tuple(x for x in rest if x not in block)
            for tail in rec(i + 1, left):
                yield (block,) + tail

    yield from rec(0, tuple(range(1, k + 1)))


def two_twos_class_size(k: int) -> int:
    """Pairs (vector with two 2's over c(k) slots, partition)."""
    c = c_of(k)
    if k % 3 != 1 or c < 2:
        raise ValueError("needs k = 1 mod 3 and k >= 4")
    return binom(c, 2) * factorial(k) // (4 * 6 ** (c - 2))


def one_four_class_size(k: int) -> int:
    """Pairs (vector with one 4 over c(k)-1 slots, partition)."""
    c = c_of(k)
    if k % 3 != 1 or c < 2:
        raise ValueError("needs k = 1 mod 3 and k >= 4")
    return (c - 1) * factorial(k) // (factorial(4) * 6 ** (c - 2))
