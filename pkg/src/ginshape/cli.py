"""Command-line front end.

Subcommands:

* ``analyze``: generator table for one (l, m), plus the gin staircase and
  polytopes when the table certifies componentwise linearity.
* ``shape``: the limiting shape for l, as text/JSON, deterministic SVG,
  or a matplotlib figure.
* ``verify``: the cross-check suite over a range of m.

Exit codes: 0 success, 1 usage error, 2 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from .report import (
    analysis_report,
    analysis_table,
    counts_csv,
    shape_report,
    shape_table,
    verification_table,
    checks_to_json,
)
from .verify import run_checks


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _parse_m_range(text: str) -> list[int]:
    """Either a single integer or an inclusive range written a..b."""
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
        if lo > hi:
            raise ValueError(f"empty range {text}")
        return list(range(lo, hi + 1))
    return [int(text)]


def _build_parser() -> _Parser:
    parser = _Parser(prog="ginshape", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="generator table, staircase, polytopes")
    analyze.add_argument("--l", type=int, required=True,
                         help="number of collinear points (>= 3)")
    analyze.add_argument("--m", type=int, required=True, help="symbolic power (>= 1)")
    analyze.add_argument("--format", choices=("table", "json", "csv"), default="table")
    analyze.add_argument("--verify", action="store_true",
                         help="run the oracle cross-checks and embed the results")
    analyze.add_argument("--gin", action="store_true",
                         help="with --verify, also compare against the oracle gin")
    analyze.add_argument("--no-oracle", action="store_true",
                         help="with --verify, restrict to the closed-form checks")
    analyze.add_argument("--seed", type=int, default=0)
    analyze.add_argument("--figure", metavar="PATH",
                         help="render the report figure (png/pdf by extension)")

    shape = sub.add_parser("shape", help="the limiting shape for l")
    shape.add_argument("--l", type=int, required=True)
    shape.add_argument("--format", choices=("table", "json"), default="table")
    shape.add_argument("--svg", metavar="PATH", help="write a deterministic SVG 1.1 file")
    shape.add_argument("--figure", metavar="PATH", help="render a matplotlib figure")
    shape.add_argument("--overlay-m", type=int, default=None,
                       help="overlay the 1/m-scaled Newton polytope for this m")

    verify = sub.add_parser("verify", help="cross-check suite over a range of m")
    verify.add_argument("--l", type=int, required=True)
    verify.add_argument("--m", type=str, required=True,
                        help="single value or inclusive range a..b")
    verify.add_argument("--gin", action="store_true", help="include the gin comparison")
    verify.add_argument("--no-oracle", action="store_true",
                        help="skip the linear-algebra oracle comparisons")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--format", choices=("table", "json"), default="table")
    return parser


def _require(condition: bool, message: str):
    if not condition:
        raise _UsageError(message)


def _cmd_analyze(args) -> int:
    _require(args.l >= 3, "l must be >= 3")
    _require(args.m >= 1, "m must be >= 1")
    report = analysis_report(args.l, args.m, verify=args.verify, seed=args.seed,
                             with_gin=args.gin, with_oracle=not args.no_oracle)
    if args.format == "json":
        print(json.dumps(report, indent=2))
    elif args.format == "csv":
        sys.stdout.write(counts_csv(report))
    else:
        sys.stdout.write(analysis_table(report))
    if args.figure:
        from .render import save_analysis_figure

        save_analysis_figure(args.figure, args.l, args.m)
    if args.verify and not report["verification"]["all_pass"]:
        print("verification failed", file=sys.stderr)
        return 2
    return 0


def _cmd_shape(args) -> int:
    _require(args.l >= 3, "l must be >= 3")
    _require(args.overlay_m is None or args.overlay_m >= 1, "overlay m must be >= 1")
    report = shape_report(args.l, overlay_m=args.overlay_m)
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        sys.stdout.write(shape_table(report))
    if args.svg:
        from .render import write_shape_svg

        write_shape_svg(args.svg, args.l, overlay_m=args.overlay_m)
    if args.figure:
        from .render import save_shape_figure

        save_shape_figure(args.figure, args.l, overlay_m=args.overlay_m)
    return 0


def _cmd_verify(args) -> int:
    _require(args.l >= 3, "l must be >= 3")
    try:
        ms = _parse_m_range(args.m)
    except ValueError as exc:
        raise _UsageError(str(exc))
    _require(all(m >= 1 for m in ms), "m must be >= 1")
    results = run_checks(args.l, ms, seed=args.seed,
                         with_oracle=not args.no_oracle, with_gin=args.gin)
    payload = checks_to_json(results)
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(verification_table(payload))
    failures = [r for r in results if not r.ok]
    if failures:
        first = failures[0]
        print(f"first failure: {first.label()}: {first.detail}", file=sys.stderr)
        return 2
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "shape":
            return _cmd_shape(args)
        return _cmd_verify(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
