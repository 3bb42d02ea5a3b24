"""subind select: independence-constrained greedy selection."""

import argparse
import json
from pathlib import Path
from typing import Any

from subind.commands.common import note_function, record_input
from subind.errors import PreconditionError
from subind.models.reports import IndependenceType
from subind.models.values import json_value, parse_number
from subind.schemas.report import Report
from subind.services.optimizer import ConstraintSpec, constrained_select
from subind.services.specs import load_function

TYPES = {"ji": IndependenceType.JI, "mi": IndependenceType.MI, "pi": IndependenceType.PI}


def register(subparsers: Any) -> None:
    parser = subparsers.add_parser("select", help="maximize g(A) subject to A ⊥_f P")
    parser.add_argument("--utility", required=True, metavar="SPEC", help="utility g (JSON)")
    parser.add_argument("--privacy", required=True, metavar="SPEC", help="privacy f (JSON)")
    parser.add_argument("--P", dest="private", required=True, metavar="SET")
    parser.add_argument("--type", required=True, choices=sorted(TYPES))
    parser.add_argument("--epsilon", default="0", help="JI slack bound (exact if rational)")
    parser.add_argument("--budget", type=int, help="max |A| (default: every element)")
    parser.add_argument("--trace", type=Path, metavar="FILE", help="write the step trace")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, report: Report) -> None:
    g = load_function(args.utility)
    record_input(report, "utility", args.utility)
    f = load_function(args.privacy)
    record_input(report, "privacy", args.privacy)
    note_function(report, g)
    note_function(report, f)
    try:
        epsilon = parse_number(args.epsilon)
    except ValueError as exc:
        raise PreconditionError(f"--epsilon: {exc}") from exc
    spec = ConstraintSpec(
        f=f,
        private=f.ground.parse(args.private),
        type=TYPES[args.type],
        epsilon=epsilon,
        budget=f.ground.n if args.budget is None else args.budget,
    )
    result = constrained_select(g, spec)
    report.results = {"type": str(spec.type), "budget": spec.budget, **result.to_payload()}
    if not result.feasible:
        report.warn("the selected set fails the constraint on re-check")
    if args.trace is not None:
        trace = {
            "type": str(spec.type),
            "epsilon": json_value(spec.epsilon),
            "steps": result.trace_payload(),
            "selected": result.selected.text(),
            "utility": json_value(result.utility),
            "feasible": result.feasible,
        }
        args.trace.write_text(json.dumps(trace, indent=2) + "\n", encoding="utf-8")
