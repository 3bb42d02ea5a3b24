"""subind entropy: entropies and factorization checks on a joint distribution."""

import argparse
from typing import Any

from subind.commands.common import load_distribution_arg, parse_assignments
from subind.models.values import json_value
from subind.schemas.report import Report
from subind.services.entropy import check_statistical_independence, conditional_entropy
from subind.services.entropy import entropy as entropy_of


def register(subparsers: Any) -> None:
    parser = subparsers.add_parser("entropy", help="entropy of variable sets in a distribution")
    parser.add_argument("--dist", required=True, metavar="DIST", help="file or D1/D2/D3")
    what = parser.add_mutually_exclusive_group(required=True)
    what.add_argument("--set", metavar="VARS", help="H(X_VARS), or H(X_VARS | X_GIVEN)")
    what.add_argument(
        "--independent",
        nargs=2,
        metavar="X=VARS",
        help="check P(A,B) = P(A)P(B): A=... B=...",
    )
    parser.add_argument("--given", metavar="VARS")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, report: Report) -> None:
    dist = load_distribution_arg(args.dist, report)
    variables = dist.variables
    if args.set is not None:
        a = variables.parse(args.set)
        if args.given is not None:
            b = variables.parse(args.given)
            value = conditional_entropy(dist, a, b)
            report.results = {"set": a.text(), "given": b.text(), "entropy": json_value(value)}
        else:
            report.results = {"set": a.text(), "entropy": json_value(entropy_of(dist, a))}
        report.results["unit"] = "bits"
        return
    sets = parse_assignments(args.independent, ("A", "B"))
    a, b = variables.parse(sets.get("A", "")), variables.parse(sets.get("B", ""))
    verdict = check_statistical_independence(dist, a, b)
    report.results = {"A": a.text(), "B": b.text(), **verdict.to_payload()}
