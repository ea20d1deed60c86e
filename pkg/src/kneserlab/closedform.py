"""Closed-form counts, bounds and ratios, evaluated exactly.

Everything is an int or a Fraction. The coverage quantities A..E all come
from :func:`signed_coverage`, which counts r-subsets of [n] that contain a
given number of pairwise disjoint l-sets and avoid a given number of others.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial, prod
from typing import Sequence

from .combin import binom, multinomial, surjections
from .families import CoverConfig
from .hypercore import Hypergraph, popcount
from .splits import c_of, cnd, optimal_vectors


class HypothesisViolation(ValueError):
    """Inputs do not satisfy the hypotheses of the inequality being checked."""


# --- coverage counts over a disjoint cover ----------------------------------------


def signed_coverage(n: int, r: int, ell: int, required: int, excluded: int) -> int:
    """r-subsets containing ``required`` fixed disjoint l-sets and none of ``excluded`` others."""
    if required < 0 or excluded < 0:
        return 0
    return sum(
        (-1) ** i * binom(excluded, i) * binom(n - ell * (required + i), r - ell * (required + i))
        for i in range(excluded + 1)
    )


def coverage_A(n, r, ell, c, x):
    return signed_coverage(n, r, ell, x + 2, c - 2 - x)


def coverage_B(n, r, ell, c, y):
    return signed_coverage(n, r, ell, y + 1, c - 1 - y)


def coverage_C(n, r, ell, c, z):
    return signed_coverage(n, r, ell, z, c - z)


def coverage_D(n, r, ell, c, x):
    return signed_coverage(n, r, ell, x + 1, c - 2 - x)


def coverage_E(n, r, ell, c, z):
    return signed_coverage(n, r, ell, z, c - 1 - z)


@dataclass(frozen=True)
class CoverageCount:
    n: int
    r: int
    ell: int
    c: int
    A: tuple[int, ...]
    B: tuple[int, ...]
    C: tuple[int, ...]
    D: tuple[int, ...]
    E: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.r // self.ell

    def as_dict(self) -> dict[str, list[str]]:
        return {name: [str(v) for v in getattr(self, name)] for name in "ABCDE"}


def coverage_counts(n: int, r: int, ell: int, c: int) -> CoverageCount:
    """A(x), D(x) for x in 0..c-2; B(y), E(y) for y in 0..c-1; C(z) for z in 0..c."""
    if not 1 <= ell < r:
        raise ValueError(f"need 1 <= ell < r, got ell={ell} r={r}")
    if c < 2:
        raise ValueError("coverage counts need c >= 2")
    if n < c * ell:
        raise ValueError(f"n={n} cannot hold {c} disjoint {ell}-sets")
    return CoverageCount(
        n, r, ell, c,
        A=tuple(coverage_A(n, r, ell, c, x) for x in range(c - 1)),
        B=tuple(coverage_B(n, r, ell, c, y) for y in range(c)),
        C=tuple(coverage_C(n, r, ell, c, z) for z in range(c + 1)),
        D=tuple(coverage_D(n, r, ell, c, x) for x in range(c - 1)),
        E=tuple(coverage_E(n, r, ell, c, z) for z in range(c)),
    )


def exact_type_counts(n: int, r: int, cover: CoverConfig) -> dict[int, int]:
    """Number of r-subsets of [n] whose set of contained cover elements is exactly T.

    Works for any cover (overlapping or not) by inclusion-exclusion over
    supersets of T; keys are nonempty index bitmasks with nonzero count.
    """
    c = cover.c
    ms = cover.masks
    at_least = {}
    for T in range(1, 1 << c):
        u = 0
        for i in range(c):
            if T >> i & 1:
                u |= ms[i]
        size = popcount(u)
        at_least[T] = binom(n - size, r - size)
    out = {}
    for T in range(1, 1 << c):
        rest = ((1 << c) - 1) & ~T
        total = 0
        sub = rest
        while True:
            total += (-1) ** popcount(sub) * at_least[T | sub]
            if sub == 0:
                break
            sub = (sub - 1) & rest
        if total:
            out[T] = total
    return out


# --- alpha -----------------------------------------------------------------------


@dataclass(frozen=True)
class AlphaParameters:
    n: int
    r: int
    k: int
    ell: int

    def __post_init__(self) -> None:
        if not 1 <= self.ell < self.r:
            raise ValueError(f"need 1 <= ell < r, got ell={self.ell} r={self.r}")
        if self.k < 2:
            raise ValueError("k must be at least 2")


def alpha(n: int, r: int, k: int, ell: int) -> int:
    """Closed-form star-coloring count of the candidate extremal hypergraphs (k >= 4)."""
    AlphaParameters(n, r, k, ell)
    if k < 4:
        raise ValueError("alpha is stated for k >= 4")
    c, N, D = cnd(k)
    if k == 4 or r < 2 * ell:
        return N * D ** binom(n - ell, r - ell)
    if n < c * ell:
        raise ValueError(f"n={n} cannot hold {c} disjoint {ell}-sets")
    res = k % 3
    out = N
    if res == 0:
        for z in range(1, c + 1):
            out *= (3 * z) ** (coverage_C(n, r, ell, c, z) * binom(c, z))
    elif res == 1:
        for x in range(c - 1):
            out *= (4 + 3 * x) ** (coverage_A(n, r, ell, c, x) * binom(c - 2, x))
        for y in range(c - 1):
            out *= (2 + 3 * y) ** (2 * coverage_B(n, r, ell, c, y) * binom(c - 2, y))
        for z in range(1, c - 1):
            out *= (3 * z) ** (coverage_C(n, r, ell, c, z) * binom(c - 2, z))
    else:
        for y in range(c):
            out *= (2 + 3 * y) ** (coverage_B(n, r, ell, c, y) * binom(c - 1, y))
        for z in range(1, c):
            out *= (3 * z) ** (coverage_C(n, r, ell, c, z) * binom(c - 1, z))
    return out


def alpha_uncollapsed(n: int, r: int, k: int, ell: int) -> int:
    """Same quantity with one factor per index subset T instead of binomial exponents.

    Sums over every labeled optimal vector of length c(k) on the disjoint
    cover; each type T of edge (exactly the cover sets in T) contributes
    (sum of s_i over T) to the power of the number of such edges.
    """
    AlphaParameters(n, r, k, ell)
    c = c_of(k)
    if k == 4 or r < 2 * ell:
        # every edge contains exactly one cover set
        per = binom(n - ell, r - ell)
        return sum(multinomial(k, s) * prod(si**per for si in s) for s in optimal_vectors(k, c))
    total = 0
    for s in optimal_vectors(k, c):
        term = multinomial(k, s)
        for size in range(1, c + 1):
            cnt = signed_coverage(n, r, ell, size, c - size)
            for T in combinations(range(c), size):
                term *= sum(s[i] for i in T) ** cnt
        total += term
    return total


# --- star sums -------------------------------------------------------------------


def _edge_type_counts(H: Hypergraph, C: CoverConfig) -> dict[int, int]:
    counts: dict[int, int] = {}
    for em in H.masks:
        T = 0
        for i, tm in enumerate(C.masks):
            if em & tm == tm:
                T |= 1 << i
        counts[T] = counts.get(T, 0) + 1
    return counts


def _star_sum_from_types(counts: dict[int, int], k: int, c: int) -> int:
    total = 0
    for s in optimal_vectors(k, c):
        term = multinomial(k, s)
        for T, cnt in counts.items():
            term *= sum(s[i] for i in range(c) if T >> i & 1) ** cnt
            if term == 0:
                break
        total += term
    return total


def star_sum(H: Hypergraph, C: CoverConfig, k: int, ell: int) -> int:
    """Sum over (s, P) of prod over edges of sum_{t_i in e} s_i.

    The product does not depend on P once s is fixed, so each labeled
    vector s is weighted by its number of ordered partitions.
    """
    if C.ell != ell:
        raise ValueError("cover uniformity differs from ell")
    return _star_sum_from_types(_edge_type_counts(H, C), k, C.c)


def star_sum_complete(n: int, r: int, C: CoverConfig, k: int) -> int:
    """star_sum of the cover-complete hypergraph, without building it."""
    return _star_sum_from_types(exact_type_counts(n, r, C), k, C.c)


def star_product_complete(n: int, r: int, C: CoverConfig, s: Sequence[int]) -> int:
    """Star colorings of the cover-complete hypergraph for one fixed (s, P)."""
    out = 1
    for T, cnt in exact_type_counts(n, r, C).items():
        out *= sum(s[i] for i in range(C.c) if T >> i & 1) ** cnt
    return out


# --- k = 4 -----------------------------------------------------------------------


def generalized_star_count(n: int, r: int, ell: int, y: int) -> int:
    """S(y) for two l-sets sharing y vertices and four colors.

    This is the assignment-weighted sum (2+2 splits plus 3+1 splits with all
    three colors used); a coloring compatible with several assignments is
    counted once per assignment, so it is an upper bound on the number of
    generalized star colorings. See :func:`generalized_star_count_exact`.
    """
    if not 0 <= y <= ell - 1:
        raise ValueError(f"need 0 <= y <= ell-1, got y={y}")
    if not 1 <= ell < r:
        raise ValueError("need 1 <= ell < r")
    total = binom(n - ell, r - ell)
    both = binom(n - 2 * ell + y, r - 2 * ell + y)
    one = total - both
    return 6 * 4**total + 8 * (3**one - 3 * 2**one + 3) * 4**both


def generalized_star_count_exact(n: int, r: int, ell: int, y: int) -> int:
    """Number of generalized star colorings of the complete hypergraph on a
    two-set cover meeting in y vertices, with four colors.

    A coloring qualifies iff no color is used both on an edge containing only
    t1 and on an edge containing only t2; edges containing both are free.
    """
    if not 0 <= y <= ell - 1:
        raise ValueError(f"need 0 <= y <= ell-1, got y={y}")
    if not 1 <= ell < r:
        raise ValueError("need 1 <= ell < r")
    both = binom(n - 2 * ell + y, r - 2 * ell + y)
    one = binom(n - ell, r - ell) - both
    ways = sum(
        multinomial(4, (a, b, 4 - a - b)) * surjections(one, a) * surjections(one, b)
        for a in range(5)
        for b in range(5 - a)
    )
    return ways * 4**both


def generalized_star_lower_bound(n: int, r: int, ell: int) -> int:
    """6*4^C(n-l,r-l) + 4*3^C(n-l-1,r-l)*4^C(n-l-1,r-l-1)."""
    return 6 * 4 ** binom(n - ell, r - ell) + 4 * 3 ** binom(n - ell - 1, r - ell) * 4 ** binom(n - ell - 1, r - ell - 1)


def t1_upper_bound(n: int, r: int, k: int, ell: int) -> int:
    """N(k) k^(C(lc,l+1) C(n-l-1,r-l-1)) D(k)^C(n-l,r-l)."""
    if k < 4:
        raise ValueError("bound is stated for k >= 4")
    c, N, D = cnd(k)
    return N * k ** (binom(ell * c, ell + 1) * binom(n - ell - 1, r - ell - 1)) * D ** binom(n - ell, r - ell)


def disjoint_cover_lower_bound(n: int, r: int, k: int, ell: int) -> int:
    """D(k)^C(n - l c(k), r - l): colorings of the disjoint-cover hypergraph from one split."""
    c, _, D = cnd(k)
    return D ** binom(n - ell * c, r - ell)


# --- ratio of star counts, cover sizes c versus c-1 ---------------------------------


def _check_ratio_params(n, r, ell, k):
    if k % 3 != 1 or k < 7:
        raise ValueError("ratio compares covers of size c(k) and c(k)-1; needs k = 1 mod 3, k >= 7")
    if not (1 <= ell < r and r >= 2 * ell - 1):
        raise ValueError("needs 1 <= ell < r and r >= 2 ell - 1")
    c = c_of(k)
    if n < c * ell:
        raise ValueError(f"n={n} cannot hold {c} disjoint {ell}-sets")
    return c


def cover_size_ratio(n: int, r: int, ell: int, k: int) -> Fraction:
    """s(H0, P) / s(H1, P') in the collapsed form over B(y), B(z), A(x), D(x).

    H0 has c(k) disjoint cover sets carrying (3,...,3,2,2); H1 has c(k)-1
    carrying (3,...,3,4). Exactly 1 when r = 2l-1.
    """
    c = _check_ratio_params(n, r, ell, k)
    q = r // ell
    num = den = 1
    for y in range(1, min(c - 2, q - 1) + 1):
        num *= (2 + 3 * y) ** (2 * coverage_B(n, r, ell, c, y) * binom(c - 2, y))
    for z in range(1, min(c - 2, q) + 1):
        den *= (3 * z) ** (coverage_B(n, r, ell, c, z) * binom(c - 2, z))
    for x in range(1, min(c - 2, q - 2) + 1):
        num *= (4 + 3 * x) ** (coverage_A(n, r, ell, c, x) * binom(c - 2, x))
    for x in range(1, min(c - 2, q - 1) + 1):
        den *= (4 + 3 * x) ** (coverage_D(n, r, ell, c, x) * binom(c - 2, x))
    return Fraction(num, den)


def cover_size_ratio_direct(n: int, r: int, ell: int, k: int) -> Fraction:
    """The same ratio from the two star products with all five coverage counts."""
    c = _check_ratio_params(n, r, ell, k)
    s0 = 1
    for x in range(c - 1):
        s0 *= (4 + 3 * x) ** (coverage_A(n, r, ell, c, x) * binom(c - 2, x))
    for y in range(c - 1):
        s0 *= (2 + 3 * y) ** (2 * coverage_B(n, r, ell, c, y) * binom(c - 2, y))
    for z in range(1, c - 1):
        s0 *= (3 * z) ** (coverage_C(n, r, ell, c, z) * binom(c - 2, z))
    s1 = 1
    for x in range(c - 1):
        s1 *= (4 + 3 * x) ** (coverage_D(n, r, ell, c, x) * binom(c - 2, x))
    for z in range(1, c - 1):
        s1 *= (3 * z) ** (coverage_E(n, r, ell, c, z) * binom(c - 2, z))
    return Fraction(s0, s1)


def cover_size_ratio_edge_types(n: int, r: int, ell: int, k: int) -> Fraction:
    """The ratio from edge-type counts of the two disjoint covers (no A..E)."""
    c = _check_ratio_params(n, r, ell, k)
    C0 = CoverConfig.of(ell, [range(i * ell + 1, (i + 1) * ell + 1) for i in range(c)])
    C1 = CoverConfig.of(ell, [range(i * ell + 1, (i + 1) * ell + 1) for i in range(c - 1)])
    s0 = (3,) * (c - 2) + (2, 2)
    s1 = (3,) * (c - 2) + (4,)
    return Fraction(star_product_complete(n, r, C0, s0), star_product_complete(n, r, C1, s1))


def ratio_bound_small_c(n: int, r: int, ell: int, k: int) -> Fraction:
    """(1 + 4/((3c-2)(3c-6)))^(sum_x B(x) C(c-2,x)); applies when c <= q."""
    c = _check_ratio_params(n, r, ell, k)
    expo = sum(coverage_B(n, r, ell, c, x) * binom(c - 2, x) for x in range(1, c - 1))
    return (1 + Fraction(4, (3 * c - 2) * (3 * c - 6))) ** expo


def ratio_bound_large_c(n: int, r: int, ell: int, k: int) -> Fraction:
    """((3q-1)^2/((3q-3)(3q+1)))^(B(q-1) C(c-2,q-1)); applies when c >= q+1, q >= 2."""
    c = _check_ratio_params(n, r, ell, k)
    q = r // ell
    if q < 2:
        raise ValueError("bound needs q = floor(r/l) >= 2")
    expo = coverage_B(n, r, ell, c, q - 1) * binom(c - 2, q - 1)
    return Fraction((3 * q - 1) ** 2, (3 * q - 3) * (3 * q + 1)) ** expo


# name used by the operation contract
appendix_ratio = cover_size_ratio


def split_coefficient_ratio(k: int) -> Fraction:
    """|two-2s class| / |one-4 class| of (vector, partition) pairs; equals 3c(k)."""
    from .splits import one_four_class_size, two_twos_class_size

    return Fraction(two_twos_class_size(k), one_four_class_size(k))


# --- bracket on the star count ------------------------------------------------------


def bracket_constant(k: int) -> int:
    """4 C(|S|+1, 2) C(k!, 2) C(c, 2) k with |S| = number of labeled optimal vectors."""
    c = c_of(k)
    S = len(optimal_vectors(k))
    return 4 * binom(S + 1, 2) * binom(factorial(k), 2) * binom(c, 2) * k


def star_count_bracket(n: int, r: int, k: int, ell: int, total: int) -> tuple[Fraction, int]:
    """Lower and upper ends of the bracket around the star count, given star_sum ``total``."""
    A = bracket_constant(k)
    factor = 1 - A * Fraction(k - 1, k) ** binom(n - 2 * ell, r - ell)
    return factor * total, total


# --- product inequality ------------------------------------------------------------


@dataclass(frozen=True)
class ProductCheck:
    value: Fraction
    holds: bool  # value >= 1
    strict_pair: bool  # some matched a_i < b_phi(i) + m
    strict_bound: Fraction | None
    unmatched_large: bool  # p < q and max(m, unmatched b) >= 3
    six_fifths_holds: bool | None
    literal_six_fifths_condition: bool  # p < q and max(m, all b) >= 3

    @property
    def slack_class(self) -> str:
        if self.value == 1:
            return "equality"
        if self.unmatched_large:
            return "six-fifths"
        if self.strict_pair:
            return "strict-pair"
        return "loose"


def product_inequality_check(
    a: Sequence[int], b: Sequence[int], m: int, M: int, mapping: Sequence[int]
) -> ProductCheck:
    """Evaluate m^(q-p) prod a prod b / (prod (a-m) prod (b+m)) exactly.

    ``mapping[i]`` is the 0-based index in b matched to a[i]. Hypotheses are
    validated and violations raise :class:`HypothesisViolation`. The 6/5
    strengthening is checked under the condition that some *unmatched*
    b_j, or m itself, is at least 3.
    """
    p, q = len(a), len(b)
    if m not in (2, 3, 4):
        raise HypothesisViolation(f"m={m} not in {{2,3,4}}")
    if q < max(p, 1):
        raise HypothesisViolation(f"need q >= max(p, 1), got p={p} q={q}")
    if any(not m + 2 <= x <= M for x in a):
        raise HypothesisViolation(f"a values must lie in [{m + 2}, {M}]")
    if any(not 2 <= x <= M for x in b):
        raise HypothesisViolation(f"b values must lie in [2, {M}]")
    if len(mapping) != p or len(set(mapping)) != p or any(not 0 <= j < q for j in mapping):
        raise HypothesisViolation("mapping must be an injection from a-indices into b-indices")
    if any(a[i] > b[mapping[i]] + m for i in range(p)):
        raise HypothesisViolation("need a_i <= b_phi(i) + m for every i")

    value = Fraction(m ** (q - p) * prod(a) * prod(b), prod(x - m for x in a) * prod(x + m for x in b))
    strict_pair = any(a[i] < b[mapping[i]] + m for i in range(p))
    strict_bound = 1 + Fraction(m, M * M - m * m) if strict_pair else None
    unmatched = [b[j] for j in range(q) if j not in set(mapping)]
    unmatched_large = p < q and max([m] + unmatched) >= 3
    six = value >= Fraction(6, 5) if unmatched_large else None
    holds = value >= 1 and (strict_bound is None or value >= strict_bound) and six is not False
    return ProductCheck(
        value=value,
        holds=holds,
        strict_pair=strict_pair,
        strict_bound=strict_bound,
        unmatched_large=unmatched_large,
        six_fifths_holds=six,
        literal_six_fifths_condition=p < q and max([m] + list(b)) >= 3,
    )
