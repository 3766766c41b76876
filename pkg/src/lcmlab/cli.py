"""Command-line front end: point evaluations, verification sweeps, quotient
table exports, and the classic 2^n / 3^n envelope check.

Subcommands: bound, verify, gk, classic.  Records stream as JSON lines by
default (CSV with --format csv); big integers and exact rationals are
serialized as decimal strings so no consumer ever loses precision.  Exit
codes: 0 ok, 2 claim violation, 64 usage error, 65 input/hypothesis error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from fractions import Fraction

from . import bounds, consecutive, scans
from .bounds import BoundReport, REAL_GUARD_BITS
from .errors import DomainError
from .exact_arith import gcd, is_integer_multiple
from .sequences import ArithmeticProgression, QuadraticSequence, lcm_window, window

EX_OK = 0
EX_VIOLATION = 2
EX_USAGE = 64
EX_DATAERR = 65

FORMATS = ("json-lines", "csv")


class UsageError(Exception):
    """Flag combinations argparse cannot catch on its own."""


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage; the contract here is 64."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _range_arg(text: str) -> range:
    """Inclusive range flag: 'A..B' or a single 'N'."""
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}")
    if b < a:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(a, b + 1)


# ---------------------------------------------------------------------------
# serialization

def _flat(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, (list, tuple)):
        return " ".join(str(x) for x in v)
    return str(v)


def _emit(records, fmt: str, dest) -> None:
    if fmt == "json-lines":
        for rec in records:
            dest.write(json.dumps(rec, separators=(",", ":")) + "\n")
        return
    writer = None
    for rec in records:
        if writer is None:
            writer = csv.writer(dest, lineterminator="\n")
            writer.writerow(rec.keys())
        writer.writerow([_flat(v) for v in rec.values()])


def _emit_summary(fields: dict, fmt: str, dest) -> None:
    if fmt == "json-lines":
        dest.write(json.dumps({"summary": fields}, separators=(",", ":")) + "\n")
    else:
        dest.write("# summary " + " ".join(f"{k}={_flat(v)}" for k, v in fields.items()) + "\n")


def _report_record(rep: BoundReport) -> dict:
    rec: dict = {"bound": rep.bound_name, "kind": rep.kind}
    rec.update(rep.parameters)
    rec["exact_lcm"] = str(rep.exact_lcm)
    rec["value"] = repr(rep.bound_value) if isinstance(rep.bound_value, float) else str(rep.bound_value)
    rec["holds"] = rep.holds
    rec["note"] = rep.note
    return rec


# ---------------------------------------------------------------------------
# bound: report assembly for one parameter point

def ap_reports(u0: int, r: int, n: int) -> list[BoundReport]:
    """Every applicable progression claim at (u0, r, n)."""
    s = ArithmeticProgression(u0, r)
    params = {"u0": u0, "r": r, "n": n}
    d = bounds.t2_divisor(s, n)
    exact = lcm_window(window(s, 0, n))
    out = [BoundReport("T2_divisor", "divisor", exact, d, is_integer_multiple(exact, d), params)]
    if n >= 1 and gcd(u0, u0 + r) == 1:
        v = bounds.t3_equality(s, n)
        if v is not None:
            out.append(BoundReport("T3_equality", "equality", exact, Fraction(v), v == exact, params))
    if u0 >= 1 and r >= 1 and gcd(u0, r) == 1:
        out.extend(bounds.t4_bounds(s, n))
        c = bounds.conjecture1_bound(s, n)
        out.append(BoundReport("Conjecture1", "lower-bound", exact, c, exact >= c, params))
    return out


def quad_reports(a: int, t: int, b: int, m: int, n: int) -> list[BoundReport]:
    """Divisor and closed-form bound for a quadratic-sequence window."""
    s = QuadraticSequence(a, t, b)
    params = {"a": a, "t": t, "b": b, "m": m, "n": n}
    d = bounds.t7_divisor(s, m, n)
    exact = lcm_window(window(s, m, n))
    out = [BoundReport("T7_divisor", "divisor", exact, d, is_integer_multiple(exact, d), params)]
    if m == 0 and n >= 1:
        c = bounds.c1_bound(s, n)
        note = None if a >= 5 else "bound is trivial for a <= 4"
        out.append(BoundReport("C1_bound", "lower-bound", exact, c, exact >= c, params, note))
    return out


def consecutive_reports(n: int, k: int) -> list[BoundReport]:
    """Divisor/multiple sandwich and both equality criteria for lcm(n..n+k)."""
    params = {"n": n, "k": k}
    exact = consecutive.lcm_consecutive(n, k)
    d = consecutive.t8_divisor(n, k)
    out = [BoundReport("T8_divisor", "divisor", exact, Fraction(d), exact % d == 0, params)]
    e8 = consecutive.t8_equality(n, k)
    if e8 is not None:
        out.append(BoundReport("T8_equality", "equality", exact, Fraction(e8), e8 == exact, params))
    m9 = consecutive.t9_multiple(n, k)
    out.append(BoundReport("T9_multiple", "multiple", exact, Fraction(m9), m9 % exact == 0, params))
    e9 = consecutive.t9_equality(n, k)
    if e9 is not None:
        out.append(BoundReport("T9_equality", "equality", exact, Fraction(e9), e9 == exact, params))
    return out


def n2plus1_reports(n: int, r: int) -> list[BoundReport]:
    """Both forms of the lcm{k^2+1} lower bound at stride r."""
    nb = bounds.n2plus1_bound(n, r)
    exact = bounds.lcm_squares_plus_one(n)
    params = {"n": n, "r": r}
    guard = 1 - Fraction(1, 2**REAL_GUARD_BITS)
    closed_holds = Fraction(exact) >= Fraction(nb.closed_form) * guard
    return [
        BoundReport("N2plus1", "lower-bound", exact, nb.exact, exact >= nb.exact, params,
                    f"subsequence stride r={r} uses k={nb.k} terms"),
        BoundReport("N2plus1_closed_form", "lower-bound", exact, nb.closed_form, closed_holds, params),
    ]


def cmd_bound(args) -> int:
    if args.family == "ap":
        reports = ap_reports(args.u0, args.r, args.n)
    elif args.family == "quad":
        reports = quad_reports(args.a, args.t, args.b, args.m, args.n)
    elif args.family == "consecutive":
        reports = consecutive_reports(args.n, args.k)
    else:
        reports = n2plus1_reports(args.n, args.r)
    _emit([_report_record(r) for r in reports], args.format, sys.stdout)
    return EX_VIOLATION if any(not r.holds for r in reports) else EX_OK


# ---------------------------------------------------------------------------
# verify: parameter sweeps

_RANGE_FLAGS = ("u0", "r", "n", "k", "a", "t", "b", "m", "delta", "count", "max-len", "max-abs", "seed")
_PLOTTABLE = ("T6", "N2P1")


def cmd_verify(args) -> int:
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    if args.plot and args.theorem not in _PLOTTABLE:
        raise UsageError(f"--plot supports theorems {', '.join(_PLOTTABLE)} only")
    ranges = {}
    for flag in _RANGE_FLAGS:
        value = getattr(args, flag.replace("-", "_"))
        if value is not None:
            ranges[flag] = value
    started = time.monotonic()
    records, summary = scans.run_scan(args.theorem, ranges, jobs=args.jobs)
    plotted = [] if args.plot else None
    dest = sys.stdout if args.output == "-" else open(args.output, "w")
    count = 0
    try:
        def tee():
            nonlocal count
            for rec in records:
                count += 1
                if plotted is not None:
                    plotted.append(rec)
                yield rec

        _emit(tee(), args.format, dest)
        fields = {v: summary.get(v, 0) for v in (scans.HOLDS, scans.EQUALITY, scans.VIOLATION, scans.NOT_APPLICABLE)}
        _emit_summary(fields, args.format, dest)
    finally:
        if dest is not sys.stdout:
            dest.close()
    print(f"{args.theorem}: {count} records in {time.monotonic() - started:.2f}s "
          f"(jobs={args.jobs})", file=sys.stderr)
    if args.plot:
        _plot_scan(args.theorem, plotted, args.plot)
    return EX_VIOLATION if summary.get(scans.VIOLATION, 0) else EX_OK


def _plot_scan(theorem: str, records: list[dict], path: str) -> None:
    from . import plots

    if theorem == "T6":
        points = [(rec["delta"], float(rec["claim"])) for rec in records if rec["claim"]]
        plots.save_ratio_figure(points, path)
        return
    series: dict[int, list] = {}
    for rec in records:
        if rec["verdict"] == scans.NOT_APPLICABLE:
            continue
        series.setdefault(rec["r"], []).append((rec["n"], int(rec["exact_lcm"]), Fraction(rec["claim"])))
    plots.save_n2plus1_figure(sorted(series.items()), path)


# ---------------------------------------------------------------------------
# gk: quotient table export

def cmd_gk(args) -> int:
    table = consecutive.gk_table(args.k)
    out_path = args.out or f"gk_{args.k}.csv"
    with open(out_path, "w") as f:
        consecutive.write_gk_csv(table, f)
    status = EX_OK
    if args.check_closed_form:
        mismatches = 0
        for n in range(1, len(table.values) + 1):
            direct = consecutive.gk_direct(n, args.k)
            ok = direct == table.values[n - 1]
            if args.k >= 1:
                prev = consecutive.gk_direct(n, args.k - 1)
                ok = ok and consecutive.gk_recurrence(n, args.k, prev) == direct
                ok = ok and consecutive.gk_closed_form(n, args.k) == direct
            if not ok:
                mismatches += 1
        print(f"closed-form cross-check: {'ok' if not mismatches else str(mismatches) + ' mismatches'} "
              f"over {len(table.values)} entries")
        if mismatches:
            status = EX_VIOLATION
    if args.plot:
        from . import plots

        plots.save_gk_figure(table, args.plot)
    print(f"k={args.k} period={table.smallest_period}")
    return status


# ---------------------------------------------------------------------------
# classic: the 2^n / 3^n envelope

def cmd_classic(args) -> int:
    rows = scans.classic_rows(args.nmax)
    records = (
        {"n": row["n"], "lcm": str(row["lcm"]), "lower": str(row["lower"]),
         "upper": str(row["upper"]), "verdict": row["verdict"]}
        for row in rows
    )
    _emit(records, args.format, sys.stdout)
    violations = sum(1 for row in rows if row["verdict"] == scans.VIOLATION)
    fields = {
        "holds": sum(1 for row in rows if row["verdict"] == scans.HOLDS),
        "violation": violations,
        "below_threshold_n": scans.classic_below_regions(rows),
    }
    _emit_summary(fields, args.format, sys.stdout)
    if args.plot:
        from . import plots

        plots.save_classic_figure(rows, args.plot)
    return EX_VIOLATION if violations else EX_OK


# ---------------------------------------------------------------------------

def build_parser() -> _Parser:
    p = _Parser(prog="lcmlab", description="exact lcm bound computation and brute-force verification")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bound", help="evaluate every applicable claim at one parameter point")
    bf = b.add_subparsers(dest="family", required=True)
    ap_p = bf.add_parser("ap", help="arithmetic progression u_k = u0 + k*r")
    ap_p.add_argument("--u0", type=int, required=True)
    ap_p.add_argument("--r", type=int, required=True)
    ap_p.add_argument("--n", type=int, required=True)
    quad_p = bf.add_parser("quad", help="quadratic sequence u_k = a*k*(k+t) + b")
    quad_p.add_argument("--a", type=int, required=True)
    quad_p.add_argument("--t", type=int, required=True)
    quad_p.add_argument("--b", type=int, required=True)
    quad_p.add_argument("--m", type=int, default=0)
    quad_p.add_argument("--n", type=int, required=True)
    cons_p = bf.add_parser("consecutive", help="lcm(n, n+1, ..., n+k)")
    cons_p.add_argument("--n", type=int, required=True)
    cons_p.add_argument("--k", type=int, required=True)
    n2_p = bf.add_parser("n2plus1", help="lcm{1^2+1, ..., n^2+1} lower bounds")
    n2_p.add_argument("--n", type=int, required=True)
    n2_p.add_argument("--r", type=int, default=5, help="subsequence stride (>= 3)")
    for leaf in (ap_p, quad_p, cons_p, n2_p):
        leaf.add_argument("--format", choices=FORMATS, default="json-lines")
        leaf.set_defaults(func=cmd_bound)

    v = sub.add_parser("verify", help="sweep a claim over parameter ranges against the oracle")
    v.add_argument("--theorem", required=True, choices=scans.THEOREMS)
    for flag in _RANGE_FLAGS:
        v.add_argument(f"--{flag}", type=_range_arg, default=None,
                       help="inclusive range A..B or single value")
    v.add_argument("--jobs", type=int, default=1, help="worker processes (output is identical for any count)")
    v.add_argument("--format", choices=FORMATS, default="json-lines")
    v.add_argument("--output", default="-", help="records destination, - for stdout")
    v.add_argument("--plot", default=None, help="also render a figure (T6 and N2P1 scans)")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gk", help="export the quotient map g_k over one full period")
    g.add_argument("k", type=int)
    g.add_argument("--out", default=None, help="CSV path (default gk_<k>.csv)")
    g.add_argument("--check-closed-form", action="store_true",
                   help="cross-validate recurrence, closed form, and definition on the full table")
    g.add_argument("--plot", default=None, help="render the table as a step figure")
    g.set_defaults(func=cmd_gk)

    c = sub.add_parser("classic", help="check 2^n <= lcm(1..n) <= 3^n")
    c.add_argument("--nmax", type=int, required=True)
    c.add_argument("--format", choices=FORMATS, default="json-lines")
    c.add_argument("--plot", default=None, help="render the envelope figure")
    c.set_defaults(func=cmd_classic)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"lcmlab: usage error: {exc}", file=sys.stderr)
        return EX_USAGE
    except DomainError as exc:
        print(f"lcmlab: {exc}", file=sys.stderr)
        return EX_DATAERR
    except ValueError as exc:
        print(f"lcmlab: invalid input: {exc}", file=sys.stderr)
        return EX_DATAERR


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
