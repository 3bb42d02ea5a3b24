"""subind verify-lattice: check the seven implications on many pairs."""

import argparse
from typing import Any

from subind.commands.common import add_function_args, load_function_arg, record_input
from subind.schemas.report import Report
from subind.services.lattice import verify_lattice
from subind.services.specs import load_pairs


def register(subparsers: Any) -> None:
    parser = subparsers.add_parser(
        "verify-lattice", help="verify the implication lattice (exit 1 on any violation)"
    )
    add_function_args(parser)
    parser.add_argument(
        "--pairs",
        default="all",
        metavar="all|FILE",
        help='"all" disjoint pairs, or a JSON list of {"A": ..., "B": ...}',
    )
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, report: Report) -> None:
    f = load_function_arg(args, report)
    if args.pairs == "all":
        result = verify_lattice(f)
    else:
        result = verify_lattice(f, load_pairs(args.pairs, f.ground))
        record_input(report, "pairs", args.pairs)
    report.results = result.to_payload()
    if not result.ok:
        report.exit_status = 1
