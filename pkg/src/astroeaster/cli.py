"""``easter`` command line.

Exit codes: 0 success, 1 golden mismatch, 2 usage or range error,
3 fixture I/O error.
"""
from __future__ import annotations

import argparse
import sys

from . import report
from .calendar_core import MAX_YEAR, MIN_YEAR, OutOfRangeError

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_FIXTURE = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="easter",
        description="Astronomical, Catholic and Orthodox Easter dates.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("year", help="Easter dates for one year")
    p.add_argument("year", type=int)
    p.add_argument("--trace", action="store_true",
                   help="print every intermediate quantity")

    for name, help_ in (("range", "one row per year"),
                        ("stats", "astronomical minus catholic histogram")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--from", dest="from_year", type=int, required=True)
        p.add_argument("--to", dest="to_year", type=int, required=True)
        if name == "range":
            p.add_argument("--format", choices=("table", "csv"), default="table")

    p = sub.add_parser("verify", help="recompute the golden table")
    p.add_argument("--fixture", default=None,
                   help="CSV fixture (default: bundled 1950-2050 table)")
    return parser


def _verify(fixture) -> int:
    path = fixture or report.default_fixture()
    try:
        golden = report.load_golden(path)
    except report.FixtureError as exc:
        print(f"easter: {exc}", file=sys.stderr)
        return EXIT_FIXTURE
    total, mismatches = report.verify_rows(golden)
    for m in mismatches:
        print(f"{m.year} {m.method}: expected {m.expected.display()}, "
              f"computed {m.computed.display()}")
    print(f"{total - len(mismatches)}/{total} dates match")
    return EXIT_OK if not mismatches else EXIT_MISMATCH


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "year":
            sys.stdout.write(report.format_year(args.year, args.trace))
        elif args.command == "range":
            rows = report.compute_rows(args.from_year, args.to_year)
            fmt = report.format_csv if args.format == "csv" else report.format_table
            sys.stdout.write(fmt(rows))
        elif args.command == "stats":
            rows = report.compute_rows(args.from_year, args.to_year)
            sys.stdout.write(report.compute_stats(rows).render())
        else:
            return _verify(args.fixture)
    except OutOfRangeError:
        print(f"easter: year out of supported range {MIN_YEAR}–{MAX_YEAR}",
              file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"easter: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
