"""Argument helpers shared by the subcommands."""

import argparse
import hashlib
from pathlib import Path

from subind.config import get_settings
from subind.errors import PreconditionError
from subind.models.distribution import JointDistribution
from subind.models.functions import SetFunction
from subind.models.sets import GroundSet, Subset
from subind.schemas.report import Report
from subind.services.entropy import BUILTIN_DISTRIBUTIONS, make_entropy_function
from subind.services.specs import load_distribution, load_function


def digest(path: str | Path) -> str:
    """First 16 hex digits of the file's SHA-256."""
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()[:16]


def record_input(report: Report, name: str, source: str) -> None:
    if source in BUILTIN_DISTRIBUTIONS:
        report.inputs[name] = f"builtin:{source}"
    else:
        report.inputs[name] = digest(source)


def add_function_args(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--function", metavar="SPEC", help="function spec file (JSON)")
    group.add_argument(
        "--entropy-dist",
        metavar="DIST",
        help="use the entropy of a distribution file or built-in D1/D2/D3",
    )


def load_function_arg(args: argparse.Namespace, report: Report) -> SetFunction:
    if args.function is not None:
        f = load_function(args.function)
        record_input(report, "function", args.function)
    else:
        f = make_entropy_function(load_distribution(args.entropy_dist))
        record_input(report, "entropy_dist", args.entropy_dist)
    note_function(report, f)
    return f


def load_distribution_arg(source: str, report: Report, name: str = "dist") -> JointDistribution:
    dist = load_distribution(source)
    record_input(report, name, source)
    if not dist.exact:
        report.warn(f"floating probabilities compared with tolerance {get_settings().tolerance}")
    return dist


def note_function(report: Report, f: SetFunction) -> None:
    """Add the standard warnings for unvalidated or floating functions."""
    if not f.validated_submodular:
        report.warn("function is not validated submodular; results carry no guarantees")
    if not f.exact:
        report.warn(f"floating values compared with tolerance {get_settings().tolerance}")


def parse_assignments(tokens: list[str], allowed: tuple[str, ...]) -> dict[str, str]:
    """Parse ``NAME=value`` tokens such as ``A=1,2 B=3``."""
    out: dict[str, str] = {}
    for token in tokens:
        name, sep, value = token.partition("=")
        if not sep or name not in allowed:
            raise PreconditionError(
                f"expected {'/'.join(n + '=...' for n in allowed)}, got {token!r}"
            )
        if name in out:
            raise PreconditionError(f"{name} given twice")
        out[name] = value
    return out


def parse_sets(text: str, ground: GroundSet) -> list[Subset]:
    """Parse ``sets=a,b;c`` (the ``sets=`` prefix is optional)."""
    body = text.removeprefix("sets=")
    if not body.strip():
        raise PreconditionError(f"expected sets=S1;S2;..., got {text!r}")
    return [ground.parse(part) for part in body.split(";")]
