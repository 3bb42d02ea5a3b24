"""subind classify: all six independence verdicts for a pair of sets."""

import argparse
from typing import Any

from subind.commands.common import add_function_args, load_function_arg
from subind.schemas.report import Report
from subind.services.independence import classify


def register(subparsers: Any) -> None:
    parser = subparsers.add_parser("classify", help="classify a pair (A, B) into the six types")
    add_function_args(parser)
    parser.add_argument("--A", dest="a", required=True, metavar="SET")
    parser.add_argument("--B", dest="b", required=True, metavar="SET")
    parser.add_argument("--given", metavar="SET", help="condition every check on this set")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, report: Report) -> None:
    f = load_function_arg(args, report)
    given = f.ground.parse(args.given) if args.given is not None else None
    result = classify(f, f.ground.parse(args.a), f.ground.parse(args.b), given)
    if result.violations:
        report.warn("verdicts break the implication lattice; see lattice_violations")
    report.results = result.to_payload()
