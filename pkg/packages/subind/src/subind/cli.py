"""Command-line entry point: ``subind <command> ...``."""

import argparse
import logging
import sys
from collections.abc import Sequence

from pydantic import ValidationError

from subind import __version__
from subind.commands import COMMANDS
from subind.config import configure, get_settings
from subind.errors import InvariantViolationError, SubindError
from subind.schemas.report import Report, render_json, render_text

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subind",
        description="Submodular information measures and combinatorial independence",
    )
    parser.add_argument("--version", action="version", version=f"subind {__version__}")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument(
        "--tolerance", type=float, help="relative tolerance for floating comparisons"
    )
    parser.add_argument("--workers", type=int, help="processes for lattice verification")
    parser.add_argument("--verbose", "-v", action="store_true", help="debug logging")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def _configure(args: argparse.Namespace) -> None:
    overrides: dict[str, object] = {}
    if args.tolerance is not None:
        overrides["tolerance"] = args.tolerance
    if args.workers is not None:
        overrides["workers"] = args.workers
    settings = configure(**overrides) if overrides else get_settings()
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else settings.log_level.upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 for --help/--version
        return int(exc.code or 0)

    try:
        _configure(args)
    except (RuntimeError, ValidationError) as exc:
        print(f"subind: invalid configuration: {exc}", file=sys.stderr)
        return EXIT_INPUT

    report = Report(command=argv)
    try:
        args.handler(args, report)
    except InvariantViolationError as exc:
        logger.error("Invariant violated: %s", exc)
        print(f"subind: invariant violated: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except SubindError as exc:
        print(f"subind: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"subind: {exc}", file=sys.stderr)
        return EXIT_INPUT

    if args.format == "json":
        print(render_json(report))
    else:
        print(render_text(report, color=sys.stdout.isatty()))
    return report.exit_status


if __name__ == "__main__":
    sys.exit(main())
