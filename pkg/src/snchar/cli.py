"""Command line interface: ``snchar char|table|scan|verify``."""
from __future__ import annotations

import argparse
import json
import sys

from . import analysis
from .analysis import Report
from .murnaghan_nakayama import mn_char_instrumented
from .partitions import PartitionError, format_partition, parse_partition
from .roichman import hecke_char_poly, roi_char_instrumented

TABLE_LIMITS = {"mn": 14, "roi": 10}
DEFAULT_N = {"cross": 6, "ortho": 8, "bounds": 12}


class UsageError(Exception):
    pass


def _emit(report: Report, fmt: str, command: str) -> None:
    if fmt == "json":
        sys.stdout.write(report.to_json(command))
    else:
        sys.stdout.write(report.to_tsv())


def cmd_char(args: argparse.Namespace) -> int:
    lam, mu = parse_partition(args.lam), parse_partition(args.mu)
    if lam.weight != mu.weight:
        raise UsageError(f"lambda has weight {lam.weight} but mu has weight {mu.weight}")
    rules = ["mn", "roi"] if args.rule == "both" else [args.rule]
    results = {}
    if "mn" in rules:
        results["mn"] = mn_char_instrumented(lam, mu)
    if "roi" in rules:
        results["roi"] = roi_char_instrumented(lam, mu)
    values = [res.value for res in results.values()]
    agree = all(v == values[0] for v in values)

    row: dict = {"lambda": format_partition(lam), "mu": format_partition(mu),
                 "rule": args.rule, "value": values[0] if agree else ""}
    columns = ["lambda", "mu", "rule", "value"]
    if args.rule == "both":
        row.update(mn=results["mn"].value, roi=results["roi"].value,
                   agree="agree" if agree else "DISAGREE")
        columns += ["mn", "roi", "agree"]
    if args.counts:
        if "mn" in results:
            row["r"] = results["mn"].invocations
            columns.append("r")
        if "roi" in results:
            row["q"] = results["roi"].invocations
            columns.append("q")
    if args.q_poly:
        row["q_poly"] = str(hecke_char_poly(lam, mu))
        columns.append("q_poly")

    if args.format == "text":
        if args.q_poly:
            print(row["q_poly"])
        elif args.rule == "both":
            print(f"{row['value']}\tagree" if agree else
                  f"mn={row['mn']}\troi={row['roi']}\tDISAGREE")
        else:
            print(row["value"])
        for key in ("r", "q"):
            if key in row:
                print(f"{key}={row[key]}")
    else:
        report = Report("char", columns, [row])
        _emit(report, args.format, "char")
    return 0 if agree else 1


def cmd_table(args: argparse.Namespace) -> int:
    limit = TABLE_LIMITS[args.rule]
    if args.n > limit and not args.force:
        raise UsageError(f"n={args.n} exceeds the default bound {limit} for rule {args.rule};"
                         " pass --force to override")
    parts, table = analysis.character_table(args.n, args.rule)
    labels = [format_partition(p, compact=True) or "()" for p in parts]
    if args.format == "json":
        payload = {"schema_version": analysis.SCHEMA_VERSION, "command": "table",
                   "results": [{"lambda": labels[i], "values": row} for i, row in enumerate(table)],
                   "columns": labels}
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    elif args.format == "tsv":
        print("\t".join(["lambda"] + labels))
        for label, row in zip(labels, table):
            print("\t".join([label] + [str(v) for v in row]))
    else:
        width = max(len(str(v)) for row in table for v in row)
        width = max(width, max(map(len, labels)))
        left = max(map(len, labels))
        print(" " * left + " " + " ".join(l.rjust(width) for l in labels))
        for label, row in zip(labels, table):
            print(label.ljust(left) + " " + " ".join(str(v).rjust(width) for v in row))
    return 0


def cmd_scan(args: argparse.Namespace) -> int:
    n_values = [int(x) for x in args.n_list.split(",") if x.strip()]
    rows = analysis.hook_scan(args.k, args.l, n_values, method=args.method)
    report = analysis.scan_report(args.k, args.l, rows, method=args.method)
    if args.fit:
        for side in ("mn", "roi"):
            fit = analysis.fit_growth(rows, side)
            report.extra[f"fit_{side}"] = {"exponent_estimate": fit.exponent_estimate,
                                           "residual": fit.residual, "base": fit.base,
                                           "step_ratios": analysis.step_ratios(rows, side)}
    if args.format == "json":
        sys.stdout.write(report.to_json("scan"))
    else:
        sys.stdout.write(report.to_tsv())
        for key, fit in report.extra.items():
            ratios = ",".join(f"{r:.3f}" for r in fit["step_ratios"])
            print(f"# {key}\texponent={fit['exponent_estimate']:.4f}"
                  f"\tresidual={fit['residual']:.4f}\tbase={fit['base']:.4f}\tratios={ratios}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    n = args.n if args.n is not None else DEFAULT_N.get(args.suite)
    if args.suite == "tables":
        report = analysis.reproduce_tables()
    elif args.suite == "cross":
        report = analysis.cross_check_all(n, naive=n <= 7, strict=False)
    elif args.suite == "ortho":
        report = analysis.orthogonality_check(n, strict=False)
    else:
        report = analysis.bounds_suite(n, strict=False)
    if args.format == "text":
        status = "PASS" if report.passed else "FAIL"
        print(f"{status} {report.name}: {len(report.rows)} rows, {len(report.failures)} diffs")
        for failure in report.failures:
            print(f"  {failure}")
    else:
        _emit(report, args.format, "verify")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="snchar", description="Symmetric group character values.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("char", help="evaluate one character value")
    p.add_argument("--lambda", dest="lam", required=True, help="shape, e.g. 5,4,2,1")
    p.add_argument("--mu", required=True, help="cycle type, e.g. 4,3,2^2,1")
    p.add_argument("--rule", choices=["mn", "roi", "both"], default="mn")
    p.add_argument("--q-poly", action="store_true", help="print the Hecke algebra polynomial")
    p.add_argument("--counts", action="store_true", help="print recursion call counts")
    p.add_argument("--format", choices=["text", "tsv", "json"], default="text")
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("table", help="full character table of S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rule", choices=["mn", "roi"], default="mn")
    p.add_argument("--force", action="store_true", help="ignore the default size bound")
    p.add_argument("--format", choices=["text", "tsv", "json"], default="text")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("scan", help="worst-case costs over a (k,l) hook family")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n-list", required=True, help="comma-separated n values")
    p.add_argument("--fit", action="store_true", help="append growth fits")
    p.add_argument("--method", choices=["count", "run"], default="count",
                   help="count calls from memoized subtree sizes or run the recursion")
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=["tables", "cross", "ortho", "bounds"], required=True)
    p.add_argument("--n", type=int, help="size for cross/ortho, maximum size for bounds")
    p.add_argument("--format", choices=["text", "tsv", "json"], default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PartitionError, UsageError, ValueError) as exc:
        print(f"snchar: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
