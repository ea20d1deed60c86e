"""Exact counting of Kneser colorings and star colorings.

Two independent routes to kappa(H, k, l):

* ``kappa_backtrack`` extends partial colorings edge by edge, rejecting a
  color as soon as it meets a same-colored conflicting edge;
* ``kappa_chromatic`` builds the chromatic polynomial of the conflict graph
  by deletion-contraction and evaluates it at k.

Every count is a Python int. Resource limits live in :class:`Budget` and
exceeding one raises :class:`BudgetExceeded`, never returns a partial count.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from itertools import combinations
from typing import Iterable, Sequence

from .combin import surjections
from .families import CoverConfig
from .hypercore import (
    ConflictGraph,
    Hypergraph,
    coloring_as_list,
    conflict_graph,
    edge_mask,
    is_kneser_coloring,
    popcount,
)
from .splits import optimal_vectors, ordered_partitions

BUDGET_ENV = "KNESERLAB_BUDGET"


class BudgetExceeded(RuntimeError):
    """A configured resource limit would be exceeded."""


@dataclass(frozen=True)
class Budget:
    chromatic_vertices: int = 20  # conflict-graph size for deletion-contraction
    enumeration: int = 200_000_000  # k^|E| cap for brute-force paths
    ie_pairs: int = 16  # inclusion-exclusion runs over 2^pairs subsets
    backtrack_nodes: int = 50_000_000
    dp_states: int = 200_000

    def override(self, spec: str | None) -> "Budget":
        """Apply ``key=value[,key=value]`` overrides."""
        if not spec:
            return self
        known = {f.name for f in fields(self)}
        changes = {}
        for item in spec.replace(";", ",").split(","):
            item = item.strip()
            if not item:
                continue
            key, sep, val = item.partition("=")
            key = key.strip().replace("-", "_")
            if not sep or key not in known:
                raise ValueError(f"unknown budget entry {item!r}; keys: {sorted(known)}")
            changes[key] = int(float(val))
        return replace(self, **changes)

    @classmethod
    def from_env(cls) -> "Budget":
        return cls().override(os.environ.get(BUDGET_ENV))


DEFAULT_BUDGET = Budget()


# --- backtracking ---------------------------------------------------------------


def _components(adj: Sequence[int], verts: int) -> list[int]:
    """Connected components of the graph restricted to vertex mask ``verts``."""
    comps = []
    left = verts
    while left:
        seed = left & -left
        comp = seed
        frontier = seed
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = adj[v] & verts & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        left &= ~comp
    return comps


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def count_proper_colorings(
    adj: Sequence[int], k: int, symmetry: bool = True, budget: Budget = DEFAULT_BUDGET
) -> int:
    """Proper k-colorings of a graph given by adjacency bitmasks.

    Vertices are visited in descending degree (ties by index). With
    ``symmetry`` the not-yet-used colors are treated as one branch weighted
    by their number; colors are interchangeable, so this is exact.
    """
    m = len(adj)
    if m == 0:
        return 1
    if k <= 0:
        return 0
    total = 1
    nodes = [0]
    for comp in _components(adj, (1 << m) - 1):
        total *= _count_component(adj, comp, k, symmetry, budget, nodes)
        if total == 0:
            return 0
    return total


def _count_component(adj, comp: int, k: int, symmetry: bool, budget: Budget, nodes: list[int]) -> int:
    verts = _bits(comp)
    if len(verts) == 1:
        return k
    order = sorted(verts, key=lambda v: (-popcount(adj[v] & comp), v))
    pos = {v: i for i, v in enumerate(order)}
    earlier = [[pos[u] for u in _bits(adj[v] & comp) if pos[u] < i] for i, v in enumerate(order)]
    L = len(order)
    # first index from which the remaining vertices are pairwise non-adjacent
    tail = L
    for i in range(L - 1, -1, -1):
        later = [j for j in _bits(adj[order[i]] & comp) if pos[j] > i]
        if later:
            break
        tail = i
    colors = [0] * L
    limit = budget.backtrack_nodes

    def rec(i: int, used: int) -> int:
        nodes[0] += 1
        if nodes[0] > limit:
            raise BudgetExceeded(f"backtracking exceeded {limit} nodes")
        if i >= tail:
            prod = 1
            for j in range(i, L):
                seen = {colors[u] for u in earlier[j]}
                prod *= k - len(seen)
                if prod == 0:
                    return 0
            return prod
        forbidden = {colors[u] for u in earlier[i]}
        acc = 0
        if symmetry:
            for col in range(1, used + 1):
                if col not in forbidden:
                    colors[i] = col
                    acc += rec(i + 1, used)
            if used < k:
                colors[i] = used + 1
                acc += (k - used) * rec(i + 1, used + 1)
        else:
            for col in range(1, k + 1):
                if col not in forbidden:
                    colors[i] = col
                    acc += rec(i + 1, used)
        colors[i] = 0
        return acc

    return rec(0, 0)


def kappa_backtrack(
    H: Hypergraph, k: int, ell: int, symmetry: bool = True, budget: Budget = DEFAULT_BUDGET
) -> int:
    """Number of (k, l)-Kneser colorings of H by backtracking."""
    if k < 1:
        raise ValueError("k must be positive")
    if H.m == 0:
        return 1
    G = conflict_graph(H, ell)
    return count_proper_colorings(G.adjacency, k, symmetry=symmetry, budget=budget)


# --- chromatic polynomial -----------------------------------------------------


@dataclass(frozen=True)
class ChromaticPolynomial:
    """P(G, x) in the monomial basis; ``coeffs[i]`` multiplies x**i."""

    coeffs: tuple[int, ...]

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self) -> str:
        terms = [f"{c}*x^{i}" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(reversed(terms)) or "0"


def _pmul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _padd(a: list[int], b: list[int], sign: int = 1) -> list[int]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) + sign * (b[i] if i < len(b) else 0) for i in range(n)]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _falling(d: int) -> list[int]:
    """x(x-1)...(x-d+1)."""
    out = [1]
    for i in range(d):
        out = _pmul(out, [-i, 1])
    return out


def _compact(adj: dict[int, int]) -> tuple[int, ...]:
    """Relabel vertices 0..v-1 by (degree, old label); the memo key.

    The key is itself the relabeled graph, so a memo hit is always exact;
    ordering by degree only makes repeated subgraphs collide more often.
    """
    verts = sorted(adj, key=lambda v: (popcount(adj[v]), v))
    idx = {v: i for i, v in enumerate(verts)}
    out = []
    for v in verts:
        m = 0
        for u in _bits(adj[v]):
            m |= 1 << idx[u]
        out.append(m)
    return tuple(out)


def _chrom(adj: tuple[int, ...], memo: dict) -> list[int]:
    hit = memo.get(adj)
    if hit is not None:
        return hit
    g = dict(enumerate(adj))
    factor = [1]
    # strip simplicial vertices: P(G) = (x - d) P(G - v) when N(v) is a clique
    changed = True
    while changed and g:
        changed = False
        for u in sorted(g):
            nb = g[u]
            if all((g[w] | (1 << w)) & nb == nb for w in _bits(nb)):
                factor = _pmul(factor, [-popcount(nb), 1])
                for w in _bits(nb):
                    g[w] &= ~(1 << u)
                del g[u]
                changed = True
                break
    if not g:
        res = factor
    else:
        full = 0
        for u in g:
            full |= 1 << u
        comps = _components_dict(g, full)
        if len(comps) > 1:
            res = factor
            for comp in comps:
                sub = {u: g[u] & comp for u in _bits(comp)}
                res = _pmul(res, _chrom(_compact(sub), memo))
        else:
            res = _pmul(factor, _dc(g, memo))
    memo[adj] = res
    return res


def _components_dict(g: dict[int, int], full: int) -> list[int]:
    comps = []
    left = full
    while left:
        seed = left & -left
        comp = seed
        frontier = seed
        while frontier:
            u = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = g[u] & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        left &= ~comp
    return comps


def _dc(g: dict[int, int], memo: dict) -> list[int]:
    """One deletion-contraction (sparse) or addition-contraction (dense) step."""
    verts = sorted(g)
    n = len(verts)
    e = sum(popcount(g[u]) for u in verts) // 2
    if e == n * (n - 1) // 2:
        return _falling(n)
    # pick u of maximum degree; partner is a neighbour (delete) or a non-neighbour (add)
    dense = 2 * e > n * (n - 1) // 2
    if dense:
        # a vertex missing few neighbours becomes simplicial after few additions
        u = max((x for x in verts if popcount(g[x]) < n - 1), key=lambda x: (popcount(g[x]), -x))
        w = next(x for x in verts if x != u and not g[u] >> x & 1)
    else:
        # deleting edges at a minimum-degree vertex soon leaves it simplicial
        u = min(verts, key=lambda x: (popcount(g[x]), x))
        w = max(_bits(g[u]), key=lambda x: (popcount(g[x]), -x))
    toggled = dict(g)
    if dense:
        toggled[u] |= 1 << w
        toggled[w] |= 1 << u
    else:
        toggled[u] &= ~(1 << w)
        toggled[w] &= ~(1 << u)
    merged = {x: m for x, m in g.items() if x != w}
    nbw = g[w] & ~(1 << u)
    merged[u] = (merged[u] | nbw) & ~(1 << w) & ~(1 << u)
    for x in _bits(nbw):
        merged[x] = (merged[x] & ~(1 << w)) | (1 << u)
    for x in merged:
        merged[x] &= ~(1 << w)
    a = _chrom(_compact(toggled), memo)
    b = _chrom(_compact(merged), memo)
    return _padd(a, b, 1 if dense else -1)


def chromatic_polynomial(
    G: ConflictGraph | Sequence[int], budget: Budget = DEFAULT_BUDGET
) -> ChromaticPolynomial:
    """Chromatic polynomial of a graph given as a ConflictGraph or adjacency masks."""
    adj = tuple(G.adjacency) if isinstance(G, ConflictGraph) else tuple(G)
    if len(adj) > budget.chromatic_vertices:
        raise BudgetExceeded(
            f"chromatic polynomial limited to {budget.chromatic_vertices} vertices, graph has {len(adj)}"
        )
    if not adj:
        return ChromaticPolynomial((1,))
    return ChromaticPolynomial(tuple(_chrom(adj, {})))


def kappa_chromatic(H: Hypergraph, k: int, ell: int, budget: Budget = DEFAULT_BUDGET) -> int:
    """Number of (k, l)-Kneser colorings via the conflict graph's chromatic polynomial."""
    if k < 1:
        raise ValueError("k must be positive")
    if H.m == 0:
        return 1
    return chromatic_polynomial(conflict_graph(H, ell), budget)(k)


def kappa(H: Hypergraph, k: int, ell: int, method: str = "backtrack", budget: Budget = DEFAULT_BUDGET) -> int:
    if method == "backtrack":
        return kappa_backtrack(H, k, ell, budget=budget)
    if method == "chromatic":
        return kappa_chromatic(H, k, ell, budget=budget)
    raise ValueError(f"unknown method {method!r}")


# --- minimum l-cover ----------------------------------------------------------


def min_l_cover(H: Hypergraph, ell: int) -> CoverConfig:
    """A minimum set of l-sets such that every edge contains one of them.

    Exact branch and bound over l-subsets of edges, seeded with the greedy
    cover. Ties resolve to the lexicographically first optimal cover found
    when candidates are tried in sorted order.
    """
    if H.m == 0:
        raise ValueError("cover of an empty hypergraph is undefined")
    cand_sets = sorted({sub for e in H.edges for sub in combinations(e, ell)})
    full = (1 << H.m) - 1
    covers = []
    for t in cand_sets:
        tm = edge_mask(t)
        covers.append(sum(1 << i for i, em in enumerate(H.masks) if em & tm == tm))
    by_edge = [[j for j, cm in enumerate(covers) if cm >> i & 1] for i in range(H.m)]

    # greedy seed
    best: list[int] = []
    left = full
    while left:
        j = max(range(len(covers)), key=lambda x: (popcount(covers[x] & left), -x))
        best.append(j)
        left &= ~covers[j]
    best_size = [len(best)]
    best_sol = [sorted(best)]
    maxcov = max(popcount(c) for c in covers)

    def rec(left: int, chosen: list[int]) -> None:
        if not left:
            if len(chosen) < best_size[0]:
                best_size[0] = len(chosen)
                best_sol[0] = sorted(chosen)
            return
        lb = -(-popcount(left) // maxcov)
        if len(chosen) + lb >= best_size[0]:
            return
        # branch on the uncovered edge with fewest options
        i = min(_bits(left), key=lambda x: (len(by_edge[x]), x))
        for j in sorted(by_edge[i], key=lambda x: (-popcount(covers[x] & left), x)):
            chosen.append(j)
            rec(left & ~covers[j], chosen)
            chosen.pop()

    rec(full, [])
    return CoverConfig.of(ell, [cand_sets[j] for j in best_sol[0]])


# --- star colorings ----------------------------------------------------------


@dataclass(frozen=True)
class StarClass:
    kind: str  # "star", "generalized-star" or "non-star"
    split: tuple[int, ...] | None = None
    partition: tuple[tuple[int, ...], ...] | None = None


def edge_types(H: Hypergraph, C: CoverConfig) -> list[int]:
    """Per edge, the bitmask of cover indices whose set it contains."""
    out = []
    for em in H.masks:
        T = 0
        for i, tm in enumerate(C.masks):
            if em & tm == tm:
                T |= 1 << i
        out.append(T)
    return out


def star_pairs(k: int, c: int) -> list[tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]]:
    """All (labeled optimal vector of length c, ordered partition) pairs."""
    return [(s, P) for s in optimal_vectors(k, c) for P in ordered_partitions(s, k)]


def _block_of(P: tuple[tuple[int, ...], ...], k: int) -> list[int]:
    blk = [0] * (k + 1)
    for i, block in enumerate(P):
        for col in block:
            blk[col] = i
    return blk


def _color_anchors(types: Sequence[int], colors: Sequence[int], k: int, c: int) -> list[int]:
    full = (1 << c) - 1
    anc = [full] * (k + 1)
    for T, col in zip(types, colors):
        anc[col] &= T
    return anc


def classify_star(H: Hypergraph, C: CoverConfig, k: int, ell: int, coloring: Sequence[int]) -> StarClass:
    """Star, generalized-star or non-star, for a valid Kneser coloring.

    Colors are 1..k. A star witness is the first (vector, partition) pair in
    enumeration order that anchors every used color.
    """
    colors = coloring_as_list(H, coloring)
    if not is_kneser_coloring(H, ell, colors, k):
        raise ValueError("not a valid Kneser coloring")
    types = edge_types(H, C)
    anc = _color_anchors(types, colors, k, C.c)
    if any(anc[col] == 0 for col in set(colors)):
        return StarClass("non-star")
    for s, P in star_pairs(k, C.c):
        blk = _block_of(P, k)
        if all(anc[col] >> blk[col] & 1 for col in range(1, k + 1)):
            return StarClass("star", s, P)
    return StarClass("generalized-star")


def star_count_exact(
    H: Hypergraph, C: CoverConfig, k: int, ell: int, method: str = "dp", budget: Budget = DEFAULT_BUDGET
) -> int:
    """Size of the union of all (s, P) star-coloring sets of H over cover C.

    Methods:
      ``dp``        dynamic programme over edge types, state = set of
                    (s, P) pairs still consistent with the colors placed;
      ``ie``        inclusion-exclusion over subsets of (s, P) pairs;
      ``enumerate`` classify all k^|E| colorings.
    """
    pairs = star_pairs(k, C.c)
    types = edge_types(H, C)
    if not pairs:
        return 0
    if H.m == 0:
        return 1
    if any(T == 0 for T in types):
        return 0
    if method == "dp":
        return _star_dp(types, pairs, k, C.c, budget)
    if method == "ie":
        return _star_ie(types, pairs, k, budget)
    if method == "enumerate":
        return _star_enumerate(types, pairs, k, C.c, budget)
    raise ValueError(f"unknown method {method!r}")


def _star_dp(types: Sequence[int], pairs, k: int, c: int, budget: Budget) -> int:
    counts: dict[int, int] = {}
    for T in types:
        counts[T] = counts.get(T, 0) + 1
    blocks = [_block_of(P, k) for _, P in pairs]
    # allowed[T][col]: pairs in which color col sits in a block indexed by T
    allowed = {}
    for T in counts:
        per_color = [0] * (k + 1)
        for p, blk in enumerate(blocks):
            for col in range(1, k + 1):
                if T >> blk[col] & 1:
                    per_color[col] |= 1 << p
        allowed[T] = per_color
    subsets = []
    for U in range(1, 1 << k):
        subsets.append((U, popcount(U), [col + 1 for col in range(k) if U >> col & 1]))
    state = {(1 << len(pairs)) - 1: 1}
    for T in sorted(counts):
        mT = counts[T]
        per_color = allowed[T]
        nxt: dict[int, int] = {}
        for U, size, cols in subsets:
            if size > mT:
                continue
            w = surjections(mT, size)
            compat = -1
            for col in cols:
                compat &= per_color[col]
            for alive, cnt in state.items():
                a = alive & compat
                if a:
                    nxt[a] = nxt.get(a, 0) + cnt * w
        if len(nxt) > budget.dp_states:
            raise BudgetExceeded(f"star DP exceeded {budget.dp_states} states")
        state = nxt
    return sum(state.values())


def _star_ie(types: Sequence[int], pairs, k: int, budget: Budget) -> int:
    if len(pairs) > budget.ie_pairs:
        raise BudgetExceeded(
            f"inclusion-exclusion over {len(pairs)} (s, P) pairs exceeds ie_pairs={budget.ie_pairs}"
        )
    # allowed color mask per (pair, type)
    tset = sorted(set(types))
    counts = {T: types.count(T) for T in tset}
    masks = []
    for _, P in pairs:
        blk = _block_of(P, k)
        masks.append({T: sum(1 << col for col in range(1, k + 1) if T >> blk[col] & 1) for T in tset})
    total = 0
    npairs = len(pairs)
    for I in range(1, 1 << npairs):
        inter = {T: -1 for T in tset}
        for p in _bits(I):
            for T in tset:
                inter[T] &= masks[p][T]
        term = 1
        for T in tset:
            term *= popcount(inter[T] & ~1) ** counts[T]
            if term == 0:
                break
        total += term if popcount(I) % 2 else -term
    return total


def _star_enumerate(types: Sequence[int], pairs, k: int, c: int, budget: Budget) -> int:
    m = len(types)
    if k**m > budget.enumeration:
        raise BudgetExceeded(f"enumeration of {k}^{m} colorings exceeds {budget.enumeration}")
    blocks = [_block_of(P, k) for _, P in pairs]
    full = (1 << c) - 1
    total = 0

    def rec(i: int, anc: tuple[int, ...]) -> None:
        nonlocal total
        if i == m:
            if any(all(anc[col] >> blk[col] & 1 for col in range(1, k + 1)) for blk in blocks):
                total += 1
            return
        T = types[i]
        for col in range(1, k + 1):
            a = anc[col] & T
            if a == 0:
                continue
            new = anc[:col] + (a,) + anc[col + 1 :]
            rec(i + 1, new)

    rec(0, (full,) * (k + 1))
    return total


def enumerate_kneser_colorings(H: Hypergraph, k: int, ell: int, budget: Budget = DEFAULT_BUDGET) -> Iterable[tuple[int, ...]]:
    """Yield every Kneser coloring as a tuple of colors 1..k (budgeted)."""
    if k**H.m > budget.enumeration:
        raise BudgetExceeded(f"enumeration of {k}^{H.m} colorings exceeds {budget.enumeration}")
    G = conflict_graph(H, ell) if H.m else ConflictGraph(0, ell, ())
    colors = [0] * H.m

    def rec(i: int):
        if i == H.m:
            yield tuple(colors)
            return
        for col in range(1, k + 1):
            if all(colors[j] != col for j in G.neighbors(i) if j < i):
                colors[i] = col
                yield from rec(i + 1)
        colors[i] = 0

    yield from rec(0)
