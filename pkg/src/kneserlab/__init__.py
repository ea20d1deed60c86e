"""Exact counting of Kneser colorings of uniform hypergraphs.

Hypergraph primitives, intersecting families and covers, the split
program, exact counters, closed forms and a verification harness.
"""
from __future__ import annotations

from .closedform import alpha, coverage_counts, generalized_star_count, star_sum
from .exactcount import Budget, BudgetExceeded, kappa, kappa_backtrack, kappa_chromatic, star_count_exact
from .families import CoverConfig, candidate_covers, complete_from_cover, turan_number
from .hypercore import Hypergraph, conflict_graph, is_kneser_coloring, parse_hypergraph
from .splits import cnd, optimal_splits

__all__ = [
    "Budget",
    "BudgetExceeded",
    "CoverConfig",
    "Hypergraph",
    "alpha",
    "candidate_covers",
    "cnd",
    "complete_from_cover",
    "conflict_graph",
    "coverage_counts",
    "generalized_star_count",
    "is_kneser_coloring",
    "kappa",
    "kappa_backtrack",
    "kappa_chromatic",
    "optimal_splits",
    "parse_hypergraph",
    "star_count_exact",
    "star_sum",
    "turan_number",
]

__version__ = "0.1.0"
