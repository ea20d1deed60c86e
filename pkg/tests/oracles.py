"""Brute-force reference implementations, written without the package's counters.

Everything here works on plain tuples and sets and tries every candidate,
so it is slow but independent of the code under test.
"""
from __future__ import annotations

from itertools import combinations, permutations, product
from math import prod


def edges_of(n, r):
    return list(combinations(range(1, n + 1), r))


def is_kneser(edges, ell, colors):
    for i, j in combinations(range(len(edges)), 2):
        if colors[i] == colors[j] and len(set(edges[i]) & set(edges[j])) < ell:
            return False
    return True


def brute_kappa(edges, k, ell):
    edges = [tuple(e) for e in edges]
    return sum(1 for col in product(range(k), repeat=len(edges)) if is_kneser(edges, ell, col))


def brute_turan(n, r, ell):
    """Largest l-intersecting family of r-subsets of [n], by exhaustive clique search."""
    pool = edges_of(n, r)
    ok = {(a, b): len(set(a) & set(b)) >= ell for a in pool for b in pool}
    best = [0]

    def rec(chosen, rest):
        if len(chosen) + len(rest) <= best[0]:
            return
        if not rest:
            best[0] = max(best[0], len(chosen))
            return
        e, tail = rest[0], rest[1:]
        rec(chosen + [e], [f for f in tail if ok[e, f]])
        rec(chosen, tail)

    rec([], pool)
    return best[0]


def brute_best_splits(k):
    """All multisets of positive parts with sum <= k maximizing the product."""
    found = {}

    def rec(left, maxpart, parts):
        if parts:
            found.setdefault(prod(parts), set()).add(tuple(parts))
        for p in range(min(left, maxpart), 0, -1):
            rec(left - p, p, parts + [p])

    rec(k, k, [])
    top = max(found)
    return top, sorted(found[top])


def labeled_optimal_vectors(k):
    _, shapes = brute_best_splits(k)
    out = set()
    for s in shapes:
        out.update(permutations(s))
    return sorted(out)


def brute_star_count(edges, cover, k):
    """Colorings f: E -> [k] for which some labeled optimal vector s of length |cover|
    and some assignment of colors to cover slots with block sizes s puts every
    edge's color on a slot whose set the edge contains."""
    c = len(cover)
    vecs = [s for s in labeled_optimal_vectors(k) if len(s) == c and sum(s) == k]
    assignments = []
    for s in vecs:
        for blk in product(range(c), repeat=k):
            if all(blk.count(i) == s[i] for i in range(c)):
                assignments.append(blk)
    contains = [[set(t) <= set(e) for t in cover] for e in edges]
    total = 0
    for col in product(range(k), repeat=len(edges)):
        for blk in assignments:
            if all(contains[i][blk[col[i]]] for i in range(len(edges))):
                total += 1
                break
    return total


def brute_generalized_star_count(edges, cover, k, ell):
    """Kneser colorings in which every color class lies inside one cover member's star."""
    total = 0
    for col in product(range(k), repeat=len(edges)):
        if not is_kneser(edges, ell, col):
            continue
        good = True
        for x in set(col):
            cls = [set(e) for e, y in zip(edges, col) if y == x]
            if not any(all(set(t) <= e for e in cls) for t in cover):
                good = False
                break
        total += good
    return total


def brute_min_cover_size(edges, ell):
    subs = sorted({s for e in edges for s in combinations(e, ell)})
    for size in range(1, len(subs) + 1):
        for pick in combinations(subs, size):
            if all(any(set(t) <= set(e) for t in pick) for e in edges):
                return size
    return 0


def brute_cover_complete(n, r, cover):
    return [e for e in edges_of(n, r) if any(set(t) <= set(e) for t in cover)]


def brute_exact_type(n, r, sets, inside):
    """r-subsets of [n] containing exactly the sets with indices in ``inside``."""
    inside = set(inside)
    return sum(
        1
        for e in edges_of(n, r)
        if {i for i, t in enumerate(sets) if set(t) <= set(e)} == inside
    )


def brute_chromatic_value(n_vertices, edge_pairs, k):
    return sum(
        1 for col in product(range(k), repeat=n_vertices) if all(col[a] != col[b] for a, b in edge_pairs)
    )


def canonical_family(n, sets):
    """Canonical form of a set family under permutations of [n]."""
    best = None
    for perm in permutations(range(1, n + 1)):
        img = tuple(sorted(tuple(sorted(perm[v - 1] for v in t)) for t in sets))
        if best is None or img < best:
            best = img
    return best
