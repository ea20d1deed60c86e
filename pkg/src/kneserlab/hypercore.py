"""Uniform hypergraphs on [n], intersection predicates and conflict graphs.

Vertices are the integers 1..n. Every edge is stored twice: as a sorted tuple
of labels and as a bitmask (bit v-1 set for vertex v), so intersections are a
popcount. The vertex count is capped at 64 so a mask fits one machine word.

A map from edges to [k] is a (k, l)-Kneser coloring when every color class is
pairwise l-intersecting, i.e. when it is a proper coloring of the conflict
graph whose adjacency is "the two edges share fewer than l vertices".
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence, Union

MAX_VERTICES = 64

Edge = tuple[int, ...]
Coloring = Union[Sequence[int], Mapping[int, int]]


class HypergraphFormatError(ValueError):
    """Malformed hypergraph input (bad header, labels, duplicates)."""


def popcount(x: int) -> int:
    return bin(x).count("1")


def edge_mask(edge: Iterable[int]) -> int:
    mask = 0
    for v in edge:
        mask |= 1 << (v - 1)
    return mask


def mask_edge(mask: int) -> Edge:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def intersect_size(e: Iterable[int], f: Iterable[int]) -> int:
    """Return |e ∩ f| for two vertex sets (tuples, sets or masks)."""
    if isinstance(e, int) and isinstance(f, int):
        return popcount(e & f)
    return len(set(e) & set(f))


@dataclass(frozen=True)
class Hypergraph:
    """An r-uniform hypergraph on [n] with canonically ordered edges.

    Construct through :meth:`from_edges`, which validates and sorts; the raw
    constructor expects edges that are already canonical.
    """

    n: int
    r: int
    edges: tuple[Edge, ...]
    masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1 or self.r < 1:
            raise ValueError(f"need n >= 1 and r >= 1, got n={self.n}, r={self.r}")
        if self.n > MAX_VERTICES:
            raise ValueError(
                f"n={self.n} exceeds the {MAX_VERTICES}-vertex cap (edges must fit one 64-bit mask)"
            )
        prev = None
        for e in self.edges:
            if len(e) != self.r or len(set(e)) != self.r:
                raise HypergraphFormatError(f"edge {e} does not have {self.r} distinct vertices")
            if list(e) != sorted(e):
                raise HypergraphFormatError(f"edge {e} is not sorted")
            if e[0] < 1 or e[-1] > self.n:
                raise HypergraphFormatError(f"edge {e} has a label outside [1, {self.n}]")
            if prev is not None and e <= prev:
                raise HypergraphFormatError(f"edges not strictly increasing at {e}")
            prev = e
        object.__setattr__(self, "masks", tuple(edge_mask(e) for e in self.edges))

    @classmethod
    def from_edges(cls, n: int, r: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        canon = []
        seen = set()
        for e in edges:
            t = tuple(sorted(e))
            if t in seen:
                raise HypergraphFormatError(f"duplicate edge {t}")
            seen.add(t)
            canon.append(t)
        canon.sort()
        return cls(n, r, tuple(canon))

    @classmethod
    def from_masks(cls, n: int, r: int, masks: Iterable[int]) -> "Hypergraph":
        return cls.from_edges(n, r, (mask_edge(m) for m in masks))

    @classmethod
    def complete(cls, n: int, r: int) -> "Hypergraph":
        return cls(n, r, tuple(combinations(range(1, n + 1), r)))

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def index(self, edge: Iterable[int]) -> int:
        return self.edges.index(tuple(sorted(edge)))

    def relabel(self, perm: Mapping[int, int] | Sequence[int]) -> "Hypergraph":
        """Apply a vertex permutation; ``perm[v]`` is the image of v (1-based)."""
        if isinstance(perm, Mapping):
            image = perm
        else:
            image = {v: perm[v - 1] for v in range(1, self.n + 1)}
        return Hypergraph.from_edges(self.n, self.r, ([image[v] for v in e] for e in self.edges))

    def is_intersecting(self, ell: int) -> bool:
        """True when every pair of edges shares at least ``ell`` vertices."""
        ms = self.masks
        return all(popcount(a & b) >= ell for a, b in combinations(ms, 2))

    def to_text(self) -> str:
        lines = [f"{self.n} {self.r} {self.m}"]
        lines.extend(" ".join(map(str, e)) for e in self.edges)
        return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse the plain-text format: header ``n r m`` then m sorted edges.

    Edges must appear in increasing order with increasing lexicographic order
    between lines; duplicates and out-of-range labels are rejected.
    """
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise HypergraphFormatError("empty input")
    try:
        header = [int(tok) for tok in rows[0]]
    except ValueError as exc:
        raise HypergraphFormatError(f"bad header {rows[0]!r}") from exc
    if len(header) != 3:
        raise HypergraphFormatError("header must be 'n r m'")
    n, r, m = header
    if m < 0:
        raise HypergraphFormatError("negative edge count")
    if len(rows) - 1 != m:
        raise HypergraphFormatError(f"header announces {m} edges, found {len(rows) - 1}")
    edges = []
    for row in rows[1:]:
        try:
            e = tuple(int(tok) for tok in row)
        except ValueError as exc:
            raise HypergraphFormatError(f"non-integer label in {row!r}") from exc
        if len(e) != r:
            raise HypergraphFormatError(f"edge {e} does not have {r} vertices")
        if any(v < 1 or v > n for v in e):
            raise HypergraphFormatError(f"edge {e} has a label outside [1, {n}]")
        edges.append(e)
    return Hypergraph(n, r, tuple(edges))


def format_hypergraph(H: Hypergraph) -> str:
    return H.to_text()


@dataclass(frozen=True)
class ConflictGraph:
    """Graph on edge indices 0..m-1; i ~ j iff |e_i ∩ e_j| < ell."""

    m: int
    ell: int
    adjacency: tuple[int, ...]  # bitmask of neighbours per vertex

    def neighbors(self, i: int) -> list[int]:
        return [j for j in range(self.m) if self.adjacency[i] >> j & 1]

    def degree(self, i: int) -> int:
        return popcount(self.adjacency[i])

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i] >> j & 1)

    def edge_list(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.m) for j in self.neighbors(i) if i < j]

    def num_edges(self) -> int:
        return sum(self.degree(i) for i in range(self.m)) // 2

    def is_proper(self, colors: Sequence[int]) -> bool:
        return all(colors[i] != colors[j] for i, j in self.edge_list())


def conflict_graph(H: Hypergraph, ell: int) -> ConflictGraph:
    if ell < 1:
        raise ValueError(f"ell must be positive, got {ell}")
    if ell >= H.r:
        raise ValueError(f"need ell < r, got ell={ell}, r={H.r}")
    ms = H.masks
    adj = [0] * len(ms)
    for i, j in combinations(range(len(ms)), 2):
        if popcount(ms[i] & ms[j]) < ell:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return ConflictGraph(len(ms), ell, tuple(adj))


def coloring_as_list(H: Hypergraph, coloring: Coloring) -> list[int]:
    if isinstance(coloring, Mapping):
        # keys are edge indices or the edges themselves
        coloring = {k if isinstance(k, int) else H.index(k): v for k, v in coloring.items()}
        missing = [i for i in range(H.m) if i not in coloring]
        if missing:
            raise ValueError(f"coloring is not total: edges {missing} uncolored")
        return [coloring[i] for i in range(H.m)]
    colors = list(coloring)
    if len(colors) != H.m:
        raise ValueError(f"coloring has {len(colors)} entries for {H.m} edges")
    return colors


def is_kneser_coloring(H: Hypergraph, ell: int, coloring: Coloring, k: int | None = None) -> bool:
    """Check every color class of ``coloring`` is pairwise ell-intersecting.

    Works on the color classes directly rather than through the conflict
    graph. With ``k`` given, colors outside [1, k] make the answer False.
    """
    colors = coloring_as_list(H, coloring)
    if k is not None and any(not 1 <= c <= k for c in colors):
        return False
    classes: dict[int, list[set[int]]] = {}
    for e, c in zip(H.edges, colors):
        classes.setdefault(c, []).append(set(e))
    for members in classes.values():
        for a, b in combinations(members, 2):
            if len(a & b) < ell:
                return False
    return True
