"""
Command line front end.  Exit status: 0 all pass, 1 some check failed,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import catalan, pbw, verify
from .qshuffle import cache_info, clear_cache, commutator
from .textio import ParseError, element_to_json, parse_element, render_latex, render_text

ELEMENT_KINDS = {
    "catalan": (0, catalan.catalan_element),
    "xcy": (0, catalan.x_catalan_y),
    "damiani-a0": (0, lambda n: pbw.damiani(pbw.ALPHA0, n)),
    "damiani-a1": (0, lambda n: pbw.damiani(pbw.ALPHA1, n)),
    "damiani-d": (1, lambda n: pbw.damiani(pbw.DELTA, n)),
    "beck": (1, pbw.beck),
    "gtilde": (0, catalan.gtilde),
    "w": (None, lambda n: catalan.alternating_word("W", n)),
    "g": (0, lambda n: catalan.alternating_word("G", n)),
}


class UsageError(Exception):
    pass


def _q0(text):
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")
    if value in (0, 1, -1):
        raise argparse.ArgumentTypeError(f"q0 = {value} is not allowed (must avoid 0 and +-1)")
    return value


def _nonneg(text):
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return n


def _degree_flag(p, default=5):
    p.add_argument("-N", "--degree", type=_nonneg, default=default,
                   help=f"degree bound N (default {default})")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qshuffle-pbw",
        description="Exact q-shuffle computations for the PBW bases of U_q^+ of affine sl2.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("element", help="print a named element of the q-shuffle algebra")
    p.add_argument("kind", choices=sorted(ELEMENT_KINDS))
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")

    p = sub.add_parser("verify", help="run the identity suite")
    _degree_flag(p)
    p.add_argument("--q0", type=_q0, default=Fraction(2), help="specialization point for rank checks")
    p.add_argument("--only", action="append", default=[], metavar="IDS",
                   help="comma-separated check ids (repeatable)")
    p.add_argument("--bound", action="append", default=[], metavar="ID=K",
                   help="override the degree bound of one check")
    p.add_argument("--extra", action="append", default=[], metavar="LHS=RHS",
                   help="additional identity between parsed elements")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--no-timing", action="store_true", help="omit timing fields")
    p.add_argument("--list", action="store_true", help="list check ids and exit")

    p = sub.add_parser("dims", help="graded dimensions and PBW monomial counts")
    _degree_flag(p, default=8)
    p.add_argument("--q0", type=_q0, default=Fraction(2))
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("bench", help="time the core kernels")
    _degree_flag(p)
    return parser


# ---------------------------------------------------------------------------

def cmd_element(args, out):
    lo, make = ELEMENT_KINDS[args.kind]
    if lo is not None and args.n < lo:
        raise UsageError(f"{args.kind} needs n >= {lo}, got {args.n}")
    e = make(args.n)
    if args.format == "text":
        print(render_text(e), file=out)
    elif args.format == "latex":
        print(render_latex(e), file=out)
    else:
        d = {"kind": args.kind, "n": args.n}
        d.update(element_to_json(e))
        print(json.dumps(d, indent=2, ensure_ascii=False), file=out)
    return 0


def _parse_assignments(items, what):
    out = []
    for item in items:
        if "=" not in item:
            raise UsageError(f"{what} expects the form A=B, got {item!r}")
        a, b = item.split("=", 1)
        out.append((a.strip(), b.strip()))
    return out


def cmd_verify(args, out):
    if args.list:
        for cid in verify.all_ids():
            desc = verify.REGISTRY[cid].description if cid in verify.REGISTRY else "PBW independence"
            print(f"{cid:18s} {desc}", file=out)
        return 0
    if args.degree < 1:
        raise UsageError("verify needs N >= 1")
    only = [c.strip() for item in args.only for c in item.split(",") if c.strip()]
    known = set(verify.all_ids())
    for cid in only:
        if cid not in known:
            raise UsageError(f"unknown check id {cid!r}; see 'verify --list'")
    bounds = {}
    for cid, k in _parse_assignments(args.bound, "--bound"):
        if cid not in known:
            raise UsageError(f"unknown check id {cid!r}")
        try:
            bounds[cid] = int(k)
        except ValueError:
            raise UsageError(f"bound for {cid} must be an integer")
    extras = []
    for i, (lhs, rhs) in enumerate(_parse_assignments(args.extra, "--extra"), 1):
        try:
            extras.append((f"{i}", lhs, rhs, parse_element(lhs), parse_element(rhs)))
        except ParseError as exc:
            raise UsageError(f"--extra {lhs}={rhs}: {exc}")

    report = verify.run_suite(args.degree, args.q0, only=only or None, bounds=bounds)
    for label, lt, rt, lhs, rhs in extras:
        check = verify.extra_check(label, lhs, rhs)
        check.detail = f"{lt} = {rt}"
        report.checks.append(check)

    if args.format == "json":
        print(json.dumps(report.to_json(timing=not args.no_timing), indent=2, ensure_ascii=False), file=out)
    else:
        for c in report.checks:
            timing = "" if args.no_timing else f" {c.elapsed:.3f}s"
            print(f"{c.status.upper():4s} {c.id:18s} bound={c.degree}{timing}  {c.detail}", file=out)
            if not c.passed:
                w = render_text(c.witness)
                print(f"     witness: {w if len(w) < 400 else w[:400] + ' ...'}", file=out)
        sm = report.summary()
        print(f"{sm['pass']}/{sm['total']} passed (N={report.N}, q0={report.q0})", file=out)
    return 0 if report.passed else 1


def dims_rows(N, q0=2):
    rows = []
    for n in range(N + 1):
        row = {"n": n, "dim_V": 2 ** n, "dim_J": pbw.dim_J(n, q0), "dim_U": pbw.dim_U(n, q0)}
        for b in pbw.BASES:
            row[b] = len(pbw.pbw_monomials(b, n))
        row["agree"] = all(row[b] == row["dim_U"] for b in pbw.BASES)
        rows.append(row)
    return rows


def cmd_dims(args, out):
    rows = dims_rows(args.degree, args.q0)
    if args.format == "json":
        print(json.dumps({"q0": str(args.q0), "rows": rows}, indent=2), file=out)
    else:
        cols = ["n", "dim_V", "dim_J", "dim_U", *pbw.BASES]
        print("  ".join(f"{c:>11s}" for c in cols), file=out)
        for r in rows:
            mark = "" if r["agree"] else "  MISMATCH"
            print("  ".join(f"{r[c]:>11d}" for c in cols) + mark, file=out)
    return 0 if all(r["agree"] for r in rows) else 1


def cmd_bench(args, out):
    N = max(args.degree, 1)
    clear_cache()
    pbw.clear_caches()
    timings = []

    def timed(label, fn):
        t0 = time.perf_counter()
        fn()
        timings.append((label, time.perf_counter() - t0))

    timed(f"Catalan elements C_1..C_{N}", lambda: [catalan.catalan_element(k) for k in range(1, N + 1)])
    timed(f"[C_i, C_j] for i + j = {N}",
          lambda: [commutator(catalan.catalan_element(i), catalan.catalan_element(N - i))
                   for i in range(1, (N + 1) // 2)])
    timed(f"Damiani vectors through n = {N}",
          lambda: [pbw.damiani(k, n) for n in range(1, N + 1) for k in pbw.KINDS])
    timed(f"Beck vectors through n = {N}", lambda: pbw.beck(N))
    for b in pbw.BASES:
        timed(f"PBW check {b}, N = {N}", lambda b=b: pbw.pbw_independence_check(b, N))
    for label, t in timings:
        print(f"{t:9.3f}s  {label}", file=out)
    info = cache_info()
    print(f"shuffle cache: {info}", file=out)
    return 0


COMMANDS = {"element": cmd_element, "verify": cmd_verify, "dims": cmd_dims, "bench": cmd_bench}


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
