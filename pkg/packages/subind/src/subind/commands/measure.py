"""subind measure: conditional mutual information and the multi-set measures."""

import argparse
from typing import Any

from subind.commands.common import (
    add_function_args,
    load_function_arg,
    parse_assignments,
    parse_sets,
)
from subind.schemas.report import Report
from subind.services.measures import (
    conditional_independence,
    multiset_mutual_information,
    mutual_information,
    total_correlation,
)


def register(subparsers: Any) -> None:
    parser = subparsers.add_parser("measure", help="evaluate an information measure")
    add_function_args(parser)
    what = parser.add_mutually_exclusive_group(required=True)
    what.add_argument(
        "--mi", nargs="+", metavar="X=SET", help="I_f(A;B|C): A=... B=... [C=...]"
    )
    what.add_argument("--total-correlation", metavar="sets=S1;S2;...")
    what.add_argument("--multiset-mi", metavar="sets=S1;S2;...")
    what.add_argument(
        "--conditional-independence",
        nargs="+",
        metavar="X=SET",
        help="A ⊥ C | B with every characterization: A=... C=... B=...",
    )
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, report: Report) -> None:
    f = load_function_arg(args, report)
    ground = f.ground
    if args.mi is not None:
        sets = parse_assignments(args.mi, ("A", "B", "C"))
        a, b = ground.parse(sets.get("A", "")), ground.parse(sets.get("B", ""))
        c = ground.parse(sets.get("C", ""))
        report.results = {
            "measure": "mutual_information",
            "A": a.text(),
            "B": b.text(),
            "C": c.text(),
            **mutual_information(f, a, b, c).to_payload(),
        }
    elif args.conditional_independence is not None:
        sets = parse_assignments(args.conditional_independence, ("A", "B", "C"))
        a, b = ground.parse(sets.get("A", "")), ground.parse(sets.get("B", ""))
        c = ground.parse(sets.get("C", ""))
        report.results = {
            "measure": "conditional_independence",
            "A": a.text(),
            "B": b.text(),
            "C": c.text(),
            **conditional_independence(f, a, c, b).to_payload(),
        }
    else:
        if args.total_correlation is not None:
            name, text, compute = "total_correlation", args.total_correlation, total_correlation
        else:
            name, text = "multiset_mutual_information", args.multiset_mi
            compute = multiset_mutual_information
        family = parse_sets(text, ground)
        report.results = {
            "measure": name,
            "sets": [s.text() for s in family],
            **compute(f, family).to_payload(),
        }
