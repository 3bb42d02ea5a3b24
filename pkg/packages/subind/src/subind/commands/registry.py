"""subind registry: run, list and emit the embedded counterexamples."""

import argparse
from pathlib import Path
from typing import Any

from subind.schemas.report import Report
from subind.services.registry import emit_registry, load_registry, run_registry


def register(subparsers: Any) -> None:
    parser = subparsers.add_parser("registry", help="built-in counterexample registry")
    actions = parser.add_subparsers(dest="action", required=True)
    run_parser = actions.add_parser("run", help="run every entry (exit 1 on any FAIL)")
    run_parser.add_argument("ids", nargs="*", metavar="SUB-NNNN")
    actions.add_parser("list", help="list entries")
    emit_parser = actions.add_parser("emit", help="write each entry's function as a spec file")
    emit_parser.add_argument("directory", type=Path)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace, report: Report) -> None:
    if args.action == "list":
        report.results = {
            "entries": [
                {"id": e.id, "name": e.metadata.name, "claim": e.metadata.claim}
                for e in load_registry()
            ]
        }
    elif args.action == "emit":
        written = emit_registry(args.directory)
        report.results = {"written": [str(path) for path in written]}
    else:
        outcomes = run_registry(args.ids or None)
        failed = sum(not o.passed for o in outcomes)
        report.results = {
            "entries": [o.to_payload() for o in outcomes],
            "passed": len(outcomes) - failed,
            "failed": failed,
        }
        if failed:
            report.exit_status = 1
