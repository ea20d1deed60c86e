#!/usr/bin/env python3
"""Four colors: weighted sum S(y), exact generalized-star count, star sum and
kappa of the two-set cover-complete hypergraph, for each overlap y < l."""
from __future__ import annotations

import argparse

from kneserlab import closedform as cf
from kneserlab.exactcount import Budget, BudgetExceeded, kappa_backtrack
from kneserlab.families import complete_from_cover, two_set_cover


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", type=int, default=3)
    ap.add_argument("--ell", type=int, default=2)
    ap.add_argument("--n-min", type=int, default=None)
    ap.add_argument("--n-max", type=int, default=14)
    ap.add_argument("--kappa-edges", type=int, default=30, help="compute kappa only up to this many edges")
    args = ap.parse_args(argv)
    r, ell = args.r, args.ell
    budget = Budget.from_env()
    lo = args.n_min or max(r, 2 * ell + 1)
    print(f"{'n':>3} {'y':>2} {'S(y)':>24} {'exact':>24} {'star_sum':>24} {'kappa':>14}")
    for n in range(lo, args.n_max + 1):
        best = {}
        for y in range(ell):
            C = two_set_cover(ell, y)
            if C.max_vertex > n:
                continue
            s = cf.generalized_star_count(n, r, ell, y)
            e = cf.generalized_star_count_exact(n, r, ell, y)
            ss = cf.star_sum_complete(n, r, C, 4)
            H = complete_from_cover(n, r, C)
            kap = "-"
            if H.m <= args.kappa_edges:
                try:
                    kap = kappa_backtrack(H, 4, ell, budget=budget)
                except BudgetExceeded:
                    kap = "budget"
            best[y] = (s, e)
            print(f"{n:>3} {y:>2} {s:>24} {e:>24} {ss:>24} {kap!s:>14}")
        if best:
            ys = max(best, key=lambda y: best[y][0])
            ye = max(best, key=lambda y: best[y][1])
            print(f"    argmax S: y={ys}   argmax exact: y={ye}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
