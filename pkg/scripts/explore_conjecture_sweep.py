#!/usr/bin/env python3
"""Sweep the conjecture explorer over small (n, r, k, l) with l < r < 2l, k >= 5.

Prints the winning cover signature per instance and whether it matches the
sunflower candidate; instances over budget are reported and skipped.
"""
from __future__ import annotations

import argparse
import csv
import sys

from kneserlab import harness as h
from kneserlab.exactcount import Budget, BudgetExceeded


def grid(max_n: int, ks):
    for ell in (2, 3):
        for r in range(ell + 1, 2 * ell):
            for k in ks:
                for n in range(r + 2, max_n + 1):
                    yield n, r, k, ell


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--ks", type=int, nargs="+", default=[5, 6])
    ap.add_argument("--budget", default=None, help="key=value overrides")
    args = ap.parse_args(argv)
    budget = Budget.from_env().override(args.budget)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["n", "r", "k", "ell", "winner", "count", "passed", "notes"])
    failed = False
    for n, r, k, ell in grid(args.max_n, args.ks):
        try:
            rep = h.explore_conjecture(n, r, k, ell, budget=budget)
        except (BudgetExceeded, ValueError) as exc:
            w.writerow([n, r, k, ell, "", "", "", f"skipped: {exc}"])
            continue
        top = rep.rows[0] if rep.rows else None
        obs = "; ".join(f"{v.claim}={v.passed}" for v in rep.verdicts if v.kind == "observe")
        w.writerow([n, r, k, ell, top.signature if top else "", top.count if top else "", rep.passed, obs])
        sys.stdout.flush()
        failed |= not rep.passed
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
