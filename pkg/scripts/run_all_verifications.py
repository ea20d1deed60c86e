#!/usr/bin/env python3
"""Run every verification suite and write one JSON report per run.

Exit status is 1 if any asserted claim fails, else 0.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from kneserlab import harness as h
from kneserlab.exactcount import Budget


def plan(quick: bool, seed: int, trials: int):
    yield "k2-4-2-1", h.verify_k2, (4, 2, 1), {"ks": (2, 3)}
    yield "k2-5-2-1", h.verify_k2, (5, 2, 1), {"ks": (2, 3)}
    yield "k2-5-3-2", h.verify_k2, (5, 3, 2), {}
    if not quick:
        yield "k2-6-3-2", h.verify_k2, (6, 3, 2), {"workers": 4}
    for n in (5, 6, 7, 8):
        yield f"k4-{n}-3-2", h.verify_k4, (n, 3, 2), {}
    for n, r, ell, c in [(8, 4, 2, 3), (12, 4, 2, 3), (10, 3, 1, 4), (9, 5, 2, 4)]:
        yield f"identities-{n}-{r}-{ell}-{c}", h.verify_identities, (n, r, ell, c), {}
    yield "sandwich", h.verify_sandwich, (), {}
    yield "product", h.verify_product, (), {"seed": seed, "trials": trials}
    yield "cross", h.cross_validate, (), {"seed": seed, "trials": 100 if quick else trials}
    yield "explore-7-3-5-2", h.explore_conjecture, (7, 3, 5, 2), {}


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-o", "--out", default="reports")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--quick", action="store_true", help="skip the slow exhaustive (6,3,2) search")
    args = ap.parse_args(argv)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    Budget.from_env()  # fail early on a malformed override
    bad = []
    for name, fn, pos, kw in plan(args.quick, args.seed, args.trials):
        rep = fn(*pos, **kw)
        (out / f"{name}.json").write_text(rep.to_json(timing=True))
        status = "ok" if rep.passed else "FAILED"
        print(f"{name:<28} {status:<7} {rep.duration:8.2f}s", flush=True)
        if not rep.passed:
            bad.append(name)
            for v in rep.failures():
                print(f"    {v.claim}: {v.detail}", file=sys.stderr)
    print(f"{len(bad)} failing report(s)" if bad else "all reports passed")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
