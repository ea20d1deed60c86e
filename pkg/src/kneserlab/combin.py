"""Exact integer combinatorics shared by the counting modules."""
from __future__ import annotations

from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterable


def binom(a: int, b: int) -> int:
    """Binomial coefficient that vanishes outside 0 <= b <= a (and for a < 0)."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def multinomial(k: int, parts: Iterable[int]) -> int:
    parts = list(parts)
    if sum(parts) != k or any(p < 0 for p in parts):
        raise ValueError(f"parts {parts} do not sum to {k}")
    return factorial(k) // prod(factorial(p) for p in parts)


@lru_cache(maxsize=None)
def surjections(m: int, j: int) -> int:
    """Number of maps from an m-set onto a j-set."""
    if m < 0 or j < 0:
        return 0
    return sum((-1) ** i * comb(j, i) * (j - i) ** m for i in range(j + 1))
