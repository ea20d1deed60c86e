from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kneserlab.exactcount import (
    Budget,
    BudgetExceeded,
    chromatic_polynomial,
    classify_star,
    count_proper_colorings,
    enumerate_kneser_colorings,
    kappa,
    kappa_backtrack,
    kappa_chromatic,
    min_l_cover,
    star_count_exact,
    star_pairs,
)
from kneserlab.families import CoverConfig, complete_from_cover, two_set_cover
from kneserlab.hypercore import Hypergraph, conflict_graph, is_kneser_coloring

from oracles import brute_chromatic_value, brute_kappa, brute_min_cover_size, brute_star_count


@st.composite
def small_instances(draw, max_edges=7, max_k=4):
    n = draw(st.integers(3, 7))
    r = draw(st.integers(2, min(4, n - 1)))
    ell = draw(st.integers(1, r - 1))
    pool = list(combinations(range(1, n + 1), r))
    edges = draw(st.lists(st.sampled_from(pool), unique=True, max_size=min(max_edges, len(pool))))
    k = draw(st.integers(1, max_k))
    return Hypergraph.from_edges(n, r, edges), k, ell


def _adj(nv, pairs):
    adj = [0] * nv
    for a, b in pairs:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return adj


# --- kappa ----------------------------------------------------------------------------


def test_k4_two_colors():
    assert kappa_backtrack(Hypergraph.complete(4, 2), 2, 1) == 8
    assert kappa_chromatic(Hypergraph.complete(4, 2), 3, 1) == 216


def test_petersen_three_colorings():
    K5 = Hypergraph.complete(5, 2)
    assert kappa_backtrack(K5, 3, 1) == 120
    assert kappa_chromatic(K5, 3, 1) == 120
    assert chromatic_polynomial(conflict_graph(K5, 1))(2) == 0


def test_empty_and_degenerate():
    H = Hypergraph(5, 3, ())
    assert kappa_backtrack(H, 3, 1) == 1 == kappa_chromatic(H, 3, 1)
    with pytest.raises(ValueError):
        kappa_backtrack(H, 0, 1)
    with pytest.raises(ValueError):
        kappa(H, 2, 1, method="magic")


def test_no_coloring_gives_zero():
    # three pairwise disjoint edges with two colors
    H = Hypergraph.from_edges(6, 2, [(1, 2), (3, 4), (5, 6)])
    assert kappa_backtrack(H, 2, 1) == 0 == kappa_chromatic(H, 2, 1)


@given(small_instances())
def test_backtrack_matches_brute_force(inst):
    H, k, ell = inst
    want = brute_kappa(list(H.edges), k, ell)
    assert kappa_backtrack(H, k, ell) == want
    assert kappa_backtrack(H, k, ell, symmetry=False) == want
    assert kappa_chromatic(H, k, ell) == want


@given(small_instances(max_edges=5))
def test_enumeration_matches_count(inst):
    H, k, ell = inst
    cols = list(enumerate_kneser_colorings(H, k, ell))
    assert len(cols) == kappa_backtrack(H, k, ell)
    assert all(is_kneser_coloring(H, ell, c, k) for c in cols)


@given(small_instances(max_edges=6, max_k=5))
def test_monochromatic_validity(inst):
    H, _, ell = inst
    assert (kappa_backtrack(H, 1, ell) > 0) == H.is_intersecting(ell)


@pytest.mark.parametrize(
    "nv,pairs,poly_at",
    [
        (3, [(0, 1), (1, 2), (0, 2)], lambda x: x * (x - 1) * (x - 2)),
        (5, [(i, (i + 1) % 5) for i in range(5)], lambda x: (x - 1) ** 5 - (x - 1)),
        (4, [(0, 1), (1, 2), (2, 3)], lambda x: x * (x - 1) ** 3),
        (4, [], lambda x: x**4),
    ],
)
def test_chromatic_polynomial_known_graphs(nv, pairs, poly_at):
    P = chromatic_polynomial(_adj(nv, pairs))
    assert P.degree == nv
    for x in range(0, 7):
        assert P(x) == poly_at(x)


@given(st.integers(1, 7), st.data())
def test_chromatic_polynomial_matches_brute(nv, data):
    pairs = data.draw(st.lists(st.sampled_from(list(combinations(range(nv), 2)) or [(0, 0)]), unique=True)) if nv > 1 else []
    pairs = [p for p in pairs if p[0] != p[1]]
    P = chromatic_polynomial(_adj(nv, pairs))
    for x in range(4):
        assert P(x) == brute_chromatic_value(nv, pairs, x)
    assert count_proper_colorings(_adj(nv, pairs), 3) == P(3)


def test_chromatic_budget():
    H = Hypergraph.complete(7, 2)
    with pytest.raises(BudgetExceeded):
        kappa_chromatic(H, 3, 1)
    with pytest.raises(BudgetExceeded):
        kappa_backtrack(Hypergraph.complete(7, 3), 6, 1, budget=Budget(backtrack_nodes=100))


def test_budget_override_parsing(monkeypatch):
    b = Budget().override("ie_pairs=8, backtrack-nodes=1e3")
    assert b.ie_pairs == 8 and b.backtrack_nodes == 1000
    with pytest.raises(ValueError):
        Budget().override("nonsense=3")
    monkeypatch.setenv("KNESERLAB_BUDGET", "dp_states=5")
    assert Budget.from_env().dp_states == 5


# --- minimum cover -----------------------------------------------------------------


def test_min_cover_examples():
    assert min_l_cover(Hypergraph.complete(4, 2), 1).c == 3
    H = complete_from_cover(5, 2, [(1,), (2,)])
    assert min_l_cover(H, 1).c == 2
    with pytest.raises(ValueError):
        min_l_cover(Hypergraph(4, 2, ()), 1)


@given(small_instances(max_edges=6))
def test_min_cover_matches_brute(inst):
    H, _, ell = inst
    if H.m == 0:
        return
    C = min_l_cover(H, ell)
    assert C.c == brute_min_cover_size(list(H.edges), ell)
    assert all(any(set(t) <= set(e) for t in C.sets) for e in H.edges)


# --- star colorings ---------------------------------------------------------------


def test_star_count_three_point_cover_sparse():
    C = CoverConfig.of(1, [(1,), (2,), (3,)])
    H = Hypergraph.from_edges(4, 2, [(1, 2), (1, 3), (2, 3), (1, 4)])
    want = brute_star_count(list(H.edges), C.sets, 7)
    assert want > 0
    assert star_count_exact(H, C, 7, 1, method="dp") == want
    assert star_count_exact(H, C, 7, 1, method="enumerate") == want


def test_star_count_two_point_cover():
    C = CoverConfig.of(1, [(1,), (2,)])
    H = complete_from_cover(5, 2, C)
    assert H.m == 7
    assert kappa_backtrack(H, 4, 1) == 2928
    for method in ("dp", "ie", "enumerate"):
        assert star_count_exact(H, C, 4, 1, method=method) == 1488


@pytest.mark.parametrize(
    "n,r,ell,cover,k",
    [
        (5, 3, 2, [(1, 2), (1, 3)], 4),
        (5, 3, 2, [(1, 2), (3, 4)], 5),
        (5, 2, 1, [(1,)], 3),
        (4, 2, 1, [(1,), (2,)], 6),
    ],
)
def test_star_count_methods_match_oracle(n, r, ell, cover, k):
    C = CoverConfig.of(ell, cover)
    H = complete_from_cover(n, r, C)
    want = brute_star_count(list(H.edges), C.sets, k)
    methods = ("dp", "ie", "enumerate") if len(star_pairs(k, C.c)) <= 16 else ("dp", "enumerate")
    for method in methods:
        assert star_count_exact(H, C, k, ell, method=method) == want
    assert want <= kappa_backtrack(H, k, ell)


@given(small_instances(max_edges=5, max_k=5))
def test_star_count_on_random_hypergraph_covers(inst):
    H, k, ell = inst
    if H.m == 0 or k < 2:
        return
    C = min_l_cover(H, ell)
    want = brute_star_count(list(H.edges), C.sets, k)
    assert star_count_exact(H, C, k, ell) == want
    assert want <= kappa_backtrack(H, k, ell)


def test_star_count_edge_cases():
    C = CoverConfig.of(1, [(1,), (2,)])
    # no optimal vector of length 2 when k = 3
    assert star_count_exact(complete_from_cover(4, 2, C), C, 3, 1) == 0
    # an edge outside the cover has no admissible color
    H = Hypergraph.from_edges(4, 2, [(1, 3), (3, 4)])
    assert star_count_exact(H, C, 4, 1) == 0
    with pytest.raises(BudgetExceeded):
        star_count_exact(complete_from_cover(9, 2, CoverConfig.of(1, [(1,), (2,), (3,)])), CoverConfig.of(1, [(1,), (2,), (3,)]), 7, 1, method="ie")


def test_classify_star():
    C = two_set_cover(2, 1)
    H = complete_from_cover(5, 3, C)  # edges containing {1,2} or {1,3}
    idx = {e: i for i, e in enumerate(H.edges)}
    both = (1, 2, 3)
    colors = [0] * H.m
    for e, i in idx.items():
        if e == both:
            colors[i] = 1
        elif set((1, 2)) <= set(e):
            colors[i] = 1 if e[-1] == 4 else 2
        else:
            colors[i] = 3 if e[-1] == 4 else 4
    got = classify_star(H, C, 4, 2, colors)
    assert got.kind == "star" and sorted(got.split) == [2, 2]
    with pytest.raises(ValueError):
        classify_star(H, C, 4, 2, [1] * H.m)


def test_classify_generalized_star():
    # three colors forced onto the t1-only edges: anchored, but a 3+1 split is not optimal
    C = two_set_cover(2, 1)
    H = complete_from_cover(6, 3, C)
    col = {e: 4 for e in H.edges}
    col[(1, 2, 3)] = 1
    col[(1, 2, 4)], col[(1, 2, 5)], col[(1, 2, 6)] = 1, 2, 3
    assert classify_star(H, C, 4, 2, col).kind == "generalized-star"


def test_classify_nonstar():
    C = CoverConfig.of(1, [(1,), (2,)])
    H = Hypergraph.from_edges(4, 2, [(1, 3), (2, 3), (1, 2)])
    # one color on (1,3) and (2,3): they share vertex 3 but no cover element
    assert classify_star(H, C, 4, 1, {(1, 3): 1, (2, 3): 1, (1, 2): 2}).kind == "non-star"
