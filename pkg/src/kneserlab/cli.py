"""kneserlab command line: count, construct, formula, verify, explore.

Exit codes: 0 when every asserted claim holds, 1 on an assertion failure,
2 on usage, input or resource errors (diagnostic on stderr).
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import closedform as cf
from . import harness
from .exactcount import Budget, BudgetExceeded, kappa
from .families import (
    AKParameters,
    CoverConfig,
    ak_family,
    complete_from_cover,
    extremal,
    star,
    turan_optimal_s,
)
from .hypercore import HypergraphFormatError, format_hypergraph, parse_hypergraph
from .splits import cnd, optimal_splits


class UsageError(Exception):
    pass


def _need(args, *names):
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError("missing required option(s): " + " ".join("--" + n for n in missing))


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    elif args.csv:
        sys.stdout.write("key,value\n" + "".join(f"{k},{v}\n" for k, v in sorted(payload.items())))
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def _report(args, rep: harness.ExperimentReport) -> int:
    if args.json:
        sys.stdout.write(rep.to_json(timing=args.timing))
    elif args.csv:
        sys.stdout.write(rep.to_csv())
    else:
        sys.stdout.write(rep.to_text())
    for v in rep.failures():
        print(f"assertion failed [{v.claim}]: {v.detail}", file=sys.stderr)
    return 0 if rep.passed else 1


def _parse_cover(text: str, ell: int) -> CoverConfig:
    try:
        sets = [[int(x) for x in part.split(",") if x.strip()] for part in text.split(";") if part.strip()]
    except ValueError as exc:
        raise UsageError(f"bad --cover {text!r}: expected e.g. '1,2;3,4'") from exc
    return CoverConfig.of(ell, sets)


# --- subcommands -------------------------------------------------------------------


def cmd_count(args, budget: Budget) -> int:
    _need(args, "k", "ell")
    try:
        text = sys.stdin.read() if args.file == "-" else open(args.file).read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from exc
    H = parse_hypergraph(text)
    val = kappa(H, args.k, args.ell, method=args.method, budget=budget)
    _emit(args, {"kappa": str(val), "k": str(args.k), "ell": str(args.ell), "method": args.method}, str(val))
    return 0


def cmd_construct(args, budget: Budget) -> int:
    _need(args, "n", "r", "ell")
    fam = args.family
    if fam == "star":
        H = star(args.n, args.r, args.ell)
    elif fam == "ak":
        s = args.s if args.s is not None else turan_optimal_s(args.n, args.r, args.ell)[0]
        H = ak_family(AKParameters(args.n, args.r, args.ell, s))
    elif fam == "cover-complete":
        _need(args, "cover")
        H = complete_from_cover(args.n, args.r, _parse_cover(args.cover, args.ell))
    else:
        _need(args, "k")
        H = extremal(args.n, args.r, args.k, args.ell)
    out = format_hypergraph(H)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


def cmd_formula(args, budget: Budget) -> int:
    what = args.what
    payload: dict[str, str]
    if what == "cnd":
        _need(args, "k")
        c, N, D = cnd(args.k)
        payload = {"c": str(c), "N": str(N), "D": str(D)}
        text = f"c={c} N={N} D={D}"
    elif what == "splits":
        _need(args, "k")
        sp = optimal_splits(args.k)
        payload = {"splits": [" ".join(map(str, s.components)) for s in sp], "value": str(sp[0].value)}
        text = "\n".join(" ".join(map(str, s.components)) for s in sp) + f"\nvalue={sp[0].value}"
    elif what == "alpha":
        _need(args, "n", "r", "k", "ell")
        val = cf.alpha(args.n, args.r, args.k, args.ell)
        payload, text = {"alpha": str(val)}, str(val)
    elif what == "t1-bound":
        _need(args, "n", "r", "k", "ell")
        val = cf.t1_upper_bound(args.n, args.r, args.k, args.ell)
        payload, text = {"t1_bound": str(val)}, str(val)
    elif what == "coverage":
        _need(args, "n", "r", "ell", "c")
        cc = cf.coverage_counts(args.n, args.r, args.ell, args.c)
        payload = {name: " ".join(vals) for name, vals in cc.as_dict().items()}
        text = "\n".join(f"{name}: {v}" for name, v in payload.items())
    elif what == "s-of-y":
        _need(args, "n", "r", "ell")
        ys = [args.y] if args.y is not None else list(range(args.ell))
        vals = {y: cf.generalized_star_count(args.n, args.r, args.ell, y) for y in ys}
        payload = {f"S({y})": str(v) for y, v in vals.items()}
        text = "\n".join(f"S({y})={v}" for y, v in vals.items())
    else:  # ratio
        _need(args, "n", "r", "k", "ell")
        n, r, k, ell = args.n, args.r, args.k, args.ell
        val = cf.cover_size_ratio(n, r, ell, k)
        payload = {"ratio": str(val), "split_coefficient_ratio": str(cf.split_coefficient_ratio(k))}
        q = r // ell
        c = -(-k // 3)
        if c <= q:
            payload["small_c_bound"] = str(cf.ratio_bound_small_c(n, r, ell, k))
        elif q >= 2:
            payload["large_c_bound"] = str(cf.ratio_bound_large_c(n, r, ell, k))
        text = "\n".join(f"{key}={_short(v)}" for key, v in sorted(payload.items()))
    _emit(args, payload, text)
    return 0


def _short(v: str) -> str:
    f = Fraction(v)
    if f.denominator == 1 or len(v) < 40:
        return v
    return f"{float(f):.12g} (exact {len(str(f.numerator))}-digit fraction)"


def cmd_verify(args, budget: Budget) -> int:
    suite = args.suite
    if suite == "k2":
        _need(args, "n", "r", "ell")
        ks = tuple(args.ks) if args.ks else (2,)
        rep = harness.verify_k2(args.n, args.r, args.ell, ks=ks, workers=args.workers)
    elif suite == "k4":
        _need(args, "n", "r", "ell")
        rep = harness.verify_k4(args.n, args.r, args.ell, budget=budget)
    elif suite == "identities":
        _need(args, "n", "r", "ell", "c")
        rep = harness.verify_identities(args.n, args.r, args.ell, args.c)
    elif suite == "sandwich":
        rep = harness.verify_sandwich(budget=budget)
    elif suite == "cross":
        rep = harness.cross_validate(args.seed, args.trials, budget=budget)
    else:  # product, lemma37
        rep = harness.verify_product(args.seed, args.trials)
    return _report(args, rep)


def cmd_explore(args, budget: Budget) -> int:
    _need(args, "n", "r", "k", "ell")
    return _report(args, harness.explore_conjecture(args.n, args.r, args.k, args.ell, budget=budget))


# --- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    out = common.add_mutually_exclusive_group()
    out.add_argument("--json", action="store_true", help="machine-readable JSON output")
    out.add_argument("--csv", action="store_true", help="CSV output")
    common.add_argument("--budget", default=None, help="overrides, e.g. backtrack_nodes=1e6,ie_pairs=12")
    common.add_argument("--timing", action="store_true", help="include wall-clock duration in JSON reports")
    for name in ("n", "r", "k", "ell", "c", "y", "s"):
        common.add_argument(f"--{name}", type=int, default=None)

    ap = argparse.ArgumentParser(prog="kneserlab", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="number of Kneser colorings of a hypergraph file")
    p.add_argument("file", help="hypergraph file, or - for stdin")
    p.add_argument("--method", choices=("backtrack", "chromatic"), default="backtrack")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("construct", parents=[common], help="emit a hypergraph file")
    p.add_argument("--family", choices=("star", "ak", "cover-complete", "extremal"), required=True)
    p.add_argument("--cover", default=None, help="cover sets, e.g. '1,2;3,4'")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("formula", parents=[common], help="evaluate a closed form exactly")
    p.add_argument("--what", choices=("alpha", "cnd", "splits", "coverage", "s-of-y", "t1-bound", "ratio"), required=True)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=("k2", "k4", "identities", "sandwich", "product", "lemma37", "cross"), required=True)
    p.add_argument("--ks", type=int, nargs="+", default=None, help="color counts for the k2 suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("explore", parents=[common], help="rank cover classes for k >= 5, l < r < 2l")
    p.set_defaults(func=cmd_explore)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        budget = Budget.from_env().override(args.budget)
        return args.func(args, budget)
    except (UsageError, HypergraphFormatError, BudgetExceeded, ValueError) as exc:
        print(f"kneserlab {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
