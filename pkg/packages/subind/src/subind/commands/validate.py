"""subind validate: brute-force submodularity, monotonicity and normalization."""

import argparse
from typing import Any

from subind.commands.common import add_function_args, load_function_arg
from subind.schemas.report import Report
from subind.services.validation import validate


def register(subparsers: Any) -> None:
    parser = subparsers.add_parser("validate", help="validate a set function exhaustively")
    add_function_args(parser)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, report: Report) -> None:
    f = load_function_arg(args, report)
    report.results = {"family": str(f.family), **validate(f).to_payload()}
