"""Constructors for the hypergraph families and intersecting-family extremes.

Covers are lists of l-sets. Isomorphism classes of covers are handled
through Venn-region counts: for c sets, every vertex of their union lies in
exactly one nonempty region R of [c] (the indices of the sets containing
it), and the vector of region sizes determines the cover up to relabeling.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence

from .combin import binom
from .hypercore import Hypergraph, edge_mask, popcount
from .splits import c_of

ENUMERATION_EDGE_CAP = 24


@dataclass(frozen=True)
class CoverConfig:
    """An ordered list of c distinct l-subsets of [n]."""

    ell: int
    sets: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        canon = tuple(tuple(sorted(t)) for t in self.sets)
        object.__setattr__(self, "sets", canon)
        if not canon:
            raise ValueError("a cover needs at least one set")
        for t in canon:
            if len(t) != self.ell or len(set(t)) != self.ell:
                raise ValueError(f"cover element {t} is not an {self.ell}-set")
            if t[0] < 1:
                raise ValueError(f"cover element {t} has a label below 1")
        if len(set(canon)) != len(canon):
            raise ValueError("cover elements must be distinct")

    @classmethod
    def of(cls, ell: int, sets: Iterable[Iterable[int]]) -> "CoverConfig":
        return cls(ell, tuple(tuple(t) for t in sets))

    @property
    def c(self) -> int:
        return len(self.sets)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(edge_mask(t) for t in self.sets)

    @property
    def max_vertex(self) -> int:
        return max(t[-1] for t in self.sets)

    def pairwise_intersections(self) -> dict[tuple[int, int], int]:
        ms = self.masks
        return {(i, j): popcount(ms[i] & ms[j]) for i, j in combinations(range(self.c), 2)}

    def pairwise_unions(self) -> dict[tuple[int, int], int]:
        return {p: 2 * self.ell - y for p, y in self.pairwise_intersections().items()}

    @property
    def signature(self) -> tuple[int, ...]:
        """Sorted multiset of pairwise intersection sizes."""
        return tuple(sorted(self.pairwise_intersections().values()))

    def region_vector(self) -> tuple[int, ...]:
        """Canonical Venn-region vector, invariant under vertex and index relabeling."""
        return canonical_regions(self.c, _regions_of(self.masks))


@dataclass(frozen=True)
class AKParameters:
    n: int
    r: int
    ell: int
    s: int

    def __post_init__(self) -> None:
        if not 1 <= self.ell < self.r <= self.n:
            raise ValueError(f"need 1 <= ell < r <= n, got n={self.n} r={self.r} ell={self.ell}")
        if not 0 <= self.s <= self.r - self.ell:
            raise ValueError(f"s={self.s} outside [0, {self.r - self.ell}]")

    @property
    def window(self) -> int:
        return self.ell + 2 * self.s


def _as_cover(C, ell: int | None = None) -> CoverConfig:
    if isinstance(C, CoverConfig):
        return C
    sets = [tuple(sorted(t)) for t in C]
    return CoverConfig.of(ell if ell is not None else len(sets[0]), sets)


def complete_from_cover(n: int, r: int, C) -> Hypergraph:
    """All r-subsets of [n] containing at least one member of the cover."""
    cover = _as_cover(C)
    if cover.max_vertex > n:
        raise ValueError(f"cover uses vertex {cover.max_vertex} > n={n}")
    if cover.ell >= r:
        raise ValueError(f"need ell < r, got ell={cover.ell}, r={r}")
    universe = range(1, n + 1)
    edges = set()
    for t in cover.sets:
        rest = [v for v in universe if v not in t]
        for extra in combinations(rest, r - cover.ell):
            edges.add(tuple(sorted(t + extra)))
    return Hypergraph(n, r, tuple(sorted(edges)))


def complete_cover_size(n: int, r: int, C) -> int:
    """Edge count of the cover-complete hypergraph by inclusion-exclusion."""
    cover = _as_cover(C)
    total = 0
    ms = cover.masks
    for j in range(1, cover.c + 1):
        for sub in combinations(ms, j):
            u = 0
            for m in sub:
                u |= m
            size = popcount(u)
            total += (-1) ** (j + 1) * binom(n - size, r - size)
    return total


def star_cover(ell: int) -> CoverConfig:
    return CoverConfig.of(ell, [range(1, ell + 1)])


def star(n: int, r: int, ell: int) -> Hypergraph:
    return complete_from_cover(n, r, star_cover(ell))


def disjoint_cover(n: int, r: int, k: int, ell: int) -> CoverConfig:
    c = c_of(k)
    if n < max(r, ell * c):
        raise ValueError(f"n={n} too small: {c} disjoint {ell}-sets need {ell * c} vertices (and n >= r={r})")
    return CoverConfig.of(ell, [range(i * ell + 1, (i + 1) * ell + 1) for i in range(c)])


def extremal(n: int, r: int, k: int, ell: int) -> Hypergraph:
    """The cover-complete hypergraph on ceil(k/3) disjoint l-sets."""
    return complete_from_cover(n, r, disjoint_cover(n, r, k, ell))


def two_set_cover(ell: int, y: int) -> CoverConfig:
    """Two l-sets sharing exactly y vertices, labeled shared-first."""
    if not 0 <= y < ell:
        raise ValueError(f"intersection {y} outside [0, {ell - 1}]")
    shared = list(range(1, y + 1))
    t1 = shared + list(range(y + 1, ell + 1))
    t2 = shared + list(range(ell + 1, 2 * ell - y + 1))
    return CoverConfig.of(ell, [t1, t2])


# --- Venn-region classes of covers -------------------------------------------


def _regions_of(masks: Sequence[int]) -> dict[int, int]:
    owner: dict[int, int] = {}
    union = 0
    for m in masks:
        union |= m
    v = 0
    while union >> v:
        if union >> v & 1:
            R = 0
            for i, m in enumerate(masks):
                if m >> v & 1:
                    R |= 1 << i
            owner[R] = owner.get(R, 0) + 1
        v += 1
    return owner


def _permute_region(R: int, perm: Sequence[int]) -> int:
    out = 0
    for i, p in enumerate(perm):
        if R >> i & 1:
            out |= 1 << p
    return out


def canonical_regions(c: int, counts: dict[int, int]) -> tuple[int, ...]:
    """Lexicographically largest region vector over index permutations.

    The vector lists the size of region R for R = 1..2^c-1 in the order
    fixed by :func:`_region_order`, so larger shared regions sort first.
    """
    order = _region_order(c)
    best = None
    for perm in permutations(range(c)):
        vec = [0] * len(order)
        pos = {R: i for i, R in enumerate(order)}
        for R, x in counts.items():
            vec[pos[_permute_region(R, perm)]] = x
        t = tuple(vec)
        if best is None or t > best:
            best = t
    return best


def _region_order(c: int) -> list[int]:
    return sorted(range(1, 1 << c), key=lambda R: (-popcount(R), R))


def realize_regions(c: int, ell: int, vec: Sequence[int]) -> CoverConfig:
    """Build a cover from a region vector using consecutive labels from 1."""
    sets: list[list[int]] = [[] for _ in range(c)]
    label = 1
    for R, x in zip(_region_order(c), vec):
        for _ in range(x):
            for i in range(c):
                if R >> i & 1:
                    sets[i].append(label)
            label += 1
    return CoverConfig.of(ell, sets)


def cover_classes(n: int, ell: int, c: int) -> list[CoverConfig]:
    """One cover per isomorphism class of c distinct l-subsets of [n].

    Classes are returned in decreasing canonical region-vector order.
    """
    if c < 1:
        raise ValueError("c must be positive")
    order = _region_order(c)
    seen: set[tuple[int, ...]] = set()
    out = []
    load = [0] * c
    vec = [0] * len(order)

    def rec(idx: int, used: int) -> None:
        if idx == len(order):
            if any(x != ell for x in load):
                return
            counts = {R: x for R, x in zip(order, vec) if x}
            masks = _masks_from_counts(c, counts)
            if len(set(masks)) != c:
                return
            key = canonical_regions(c, counts)
            if key not in seen:
                seen.add(key)
                out.append(key)
            return
        R = order[idx]
        members = [i for i in range(c) if R >> i & 1]
        cap = min(ell - load[i] for i in members)
        cap = min(cap, n - used)
        for x in range(cap, -1, -1):
            for i in members:
                load[i] += x
            vec[idx] = x
            # prune: a set whose remaining regions cannot fill it
            if _fillable(idx, order, load, ell, c):
                rec(idx + 1, used + x)
            for i in members:
                load[i] -= x
        vec[idx] = 0

    rec(0, 0)
    out.sort(reverse=True)
    return [realize_regions(c, ell, v) for v in out]


def _fillable(idx: int, order: list[int], load: list[int], ell: int, c: int) -> bool:
    for i in range(c):
        if load[i] < ell and not any(order[j] >> i & 1 for j in range(idx + 1, len(order))):
            return False
    return True


def _masks_from_counts(c: int, counts: dict[int, int]) -> list[int]:
    masks = [0] * c
    bit = 0
    for R in _region_order(c):
        for _ in range(counts.get(R, 0)):
            for i in range(c):
                if R >> i & 1:
                    masks[i] |= 1 << bit
            bit += 1
    return masks


def candidate_covers(n: int, r: int, k: int, ell: int, asymptotic: bool = False) -> list[CoverConfig]:
    """Covers whose complete hypergraphs are the candidate extremal ones.

    * k in {2, 3}, or k >= 5 with r >= 2l-1: the disjoint cover.
    * k = 4: two l-sets meeting in l-1 vertices; with ``asymptotic`` every
      intersection size 0..l-1.
    * k >= 5 with r < 2l-1: one cover per multiset of pairwise intersection
      sizes with every pairwise union larger than r.
    """
    if not (k >= 2 and 1 <= ell < r):
        raise ValueError(f"need k >= 2 and 1 <= ell < r, got k={k} r={r} ell={ell}")
    if k == 4:
        ys = range(ell - 1, -1, -1) if asymptotic else [ell - 1]
        covers = [two_set_cover(ell, y) for y in ys]
    elif k in (2, 3) or r >= 2 * ell - 1:
        covers = [disjoint_cover(n, r, k, ell)]
    else:
        covers = []
        seen = set()
        for cov in cover_classes(n, ell, c_of(k)):
            if all(u > r for u in cov.pairwise_unions().values()) and cov.signature not in seen:
                seen.add(cov.signature)
                covers.append(cov)
    for cov in covers:
        if cov.max_vertex > n:
            raise ValueError(f"n={n} too small to realize cover {cov.sets}")
    return covers


def constrained_cover_classes(n: int, r: int, k: int, ell: int) -> list[CoverConfig]:
    """All cover classes with pairwise unions larger than r (no signature dedup)."""
    return [
        cov
        for cov in cover_classes(n, ell, c_of(k))
        if all(u > r for u in cov.pairwise_unions().values())
    ]


# --- Ahlswede-Khachatrian families --------------------------------------------


def ak_family(p: AKParameters) -> Hypergraph:
    w = p.window
    wmask = (1 << w) - 1
    need = p.ell + p.s
    edges = [
        e
        for e in combinations(range(1, p.n + 1), p.r)
        if popcount(edge_mask(e) & wmask) >= need
    ]
    return Hypergraph(p.n, p.r, tuple(edges))


def ak_family_size(n: int, r: int, ell: int, s: int) -> int:
    w = min(ell + 2 * s, n)
    return sum(binom(w, j) * binom(n - w, r - j) for j in range(ell + s, r + 1))


def turan_number(n: int, r: int, ell: int) -> int:
    """Largest size of an l-intersecting family of r-subsets of [n]."""
    if not 1 <= ell < r <= n:
        raise ValueError(f"need n >= r > ell >= 1, got n={n} r={r} ell={ell}")
    if n <= 2 * r - ell:
        return binom(n, r)
    return max(
        sum(binom(ell + 2 * s, j) * binom(n - ell - 2 * s, r - j) for j in range(ell + s, min(r, ell + 2 * s) + 1))
        for s in range(r - ell + 1)
    )


def turan_optimal_s(n: int, r: int, ell: int) -> list[int]:
    """Every s whose AK family attains the Turán number (ties included)."""
    best = turan_number(n, r, ell)
    return [s for s in range(r - ell + 1) if ak_family_size(n, r, ell, s) == best]


def single_conflict_violations(n: int, r: int, ell: int, s: int) -> list[tuple[int, ...]]:
    """r-sets that fail l-intersection with exactly one member of F_s.

    For extremal F_s (and n > 2r when l = 1) this list is empty: a set
    that conflicts with one member conflicts with at least two.
    """
    F = ak_family(AKParameters(n, r, ell, s)).masks
    bad = []
    for e in combinations(range(1, n + 1), r):
        em = edge_mask(e)
        hits = 0
        for f in F:
            if popcount(em & f) < ell:
                hits += 1
                if hits > 1:
                    break
        if hits == 1:
            bad.append(e)
    return bad


def is_permuted_ak_family(H: Hypergraph, ell: int) -> bool:
    """True when H is a vertex relabeling of some extremal AK family."""
    if H.m != turan_number(H.n, H.r, ell) or not H.is_intersecting(ell):
        return False
    if H.n <= 2 * H.r - ell:
        return True
    for s in turan_optimal_s(H.n, H.r, ell):
        w = ell + 2 * s
        # F_s is determined by its window; try every w-subset as window
        for win in combinations(range(1, H.n + 1), w):
            wm = edge_mask(win)
            if all(popcount(m & wm) >= ell + s for m in H.masks):
                return True
    return False


# --- exhaustive enumeration ----------------------------------------------------


def all_hypergraphs(n: int, r: int, start: int = 0, stop: int | None = None) -> Iterator[Hypergraph]:
    """Every r-uniform hypergraph on [n], indexed by edge-subset bitmask.

    ``start``/``stop`` select an index range so sweeps can be sharded.
    """
    pool = list(combinations(range(1, n + 1), r))
    if len(pool) > ENUMERATION_EDGE_CAP:
        raise ValueError(
            f"binom({n},{r})={len(pool)} exceeds the enumeration cap of {ENUMERATION_EDGE_CAP} edges"
        )
    total = 1 << len(pool)
    stop = total if stop is None else min(stop, total)
    for idx in range(start, stop):
        yield Hypergraph(n, r, tuple(pool[i] for i in range(len(pool)) if idx >> i & 1))


def count_hypergraphs(n: int, r: int) -> int:
    return 1 << binom(n, r)
