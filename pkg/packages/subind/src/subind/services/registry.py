"""The embedded registry of analytic counterexamples.

Each YAML file under ``subind/registry/instances`` holds one entry: a function
spec plus typed checks. ``run_registry`` evaluates every check and reports
PASS/FAIL per entry.
"""

import logging
from collections.abc import Callable, Iterable
from importlib import resources
from pathlib import Path
from typing import Any

import yaml
from pydantic import ValidationError

from subind.errors import InvariantViolationError, SpecError, SubindError, UnknownNameError
from subind.models.functions import CoverageFunction, EntropyFunction, SetFunction
from subind.models.reports import RegistryOutcome, Witness
from subind.models.sets import Subset
from subind.models.values import Value, format_value, parse_number, values_equal
from subind.schemas.registry import (
    ClassifyCheck,
    CompareCheck,
    FactorizationCheck,
    MarkovCheck,
    MultisetCheck,
    Quantity,
    RegistryEntry,
    UnionCheck,
    ValidationCheck,
    ValueCheck,
    WitnessCheck,
)
from subind.services.entropy import check_statistical_independence
from subind.services.independence import check_type, classify
from subind.services.measures import (
    multiset_mutual_information,
    mutual_information,
    total_correlation,
)
from subind.services.properties import check_markov_chain, check_multiset, check_union_nonclosure
from subind.services.specs import build_function, dump_function
from subind.services.validation import validate

logger = logging.getLogger(__name__)


def instances_dir() -> Path:
    return Path(str(resources.files("subind.registry").joinpath("instances")))


def _load_entry(path: Path) -> RegistryEntry:
    try:
        data = yaml.safe_load(path.read_text(encoding="utf-8"))
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        location = f"{path}:{mark.line + 1}:{mark.column + 1}" if mark else str(path)
        raise SpecError(f"YAML parse error: {exc}", location) from exc
    if not isinstance(data, dict):
        raise SpecError("file does not contain a YAML mapping", str(path))
    try:
        return RegistryEntry.model_validate(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        field = ".".join(str(part) for part in first["loc"])
        raise SpecError(first["msg"], f"{path}:{field}") from exc


def load_registry(directory: Path | None = None) -> list[RegistryEntry]:
    """All entries, ordered by id."""
    directory = directory or instances_dir()
    entries: dict[str, RegistryEntry] = {}
    for path in sorted(directory.glob("*.yml")):
        entry = _load_entry(path)
        if entry.id in entries:
            raise SpecError(f"duplicate registry id {entry.id}", str(path))
        entries[entry.id] = entry
    logger.debug("Loaded %d registry entries from %s", len(entries), directory)
    return [entries[key] for key in sorted(entries)]


def get_entry(entry_id: str, directory: Path | None = None) -> RegistryEntry:
    for entry in load_registry(directory):
        if entry.id == entry_id:
            return entry
    raise UnknownNameError(f"no registry entry {entry_id!r}")


def _subset(f: SetFunction, text: str | None) -> Subset:
    return f.ground.parse(text or "")


def _differs(label: str, actual: Value, expected: Value, absolute: bool = False) -> str | None:
    if values_equal(actual, expected, absolute=absolute):
        return None
    return f"{label} = {format_value(actual)}, expected {format_value(expected)}"


def _quantity(f: SetFunction, q: Quantity) -> Value:
    if q.measure == "value":
        return f.evaluate(_subset(f, q.a))
    if q.measure == "gain":
        return f.conditional_gain(_subset(f, q.a), _subset(f, q.c))
    if q.measure == "mutual_information":
        return mutual_information(f, _subset(f, q.a), _subset(f, q.b), _subset(f, q.c)).value
    sets = [_subset(f, s) for s in q.sets or []]
    if q.measure == "total_correlation":
        return total_correlation(f, sets).value
    return multiset_mutual_information(f, sets).value


def _describe(q: Quantity) -> str:
    args = [x for x in (q.a, q.b, q.c) if x is not None] or [";".join(q.sets or [])]
    return f"{q.measure}({' | '.join(args)})"


def _check_classify(f: SetFunction, check: ClassifyCheck) -> list[str]:
    given = _subset(f, check.given) if check.given is not None else None
    report = classify(f, _subset(f, check.a), _subset(f, check.b), given)
    failures = [
        f"{t} {'holds' if report.holds(t) else 'fails'}, expected {want}"
        for t, want in check.expect.items()
        if report.holds(t) != (want == "holds")
    ]
    failures.extend(f"lattice violation {p} => {c}" for p, c in report.violations)
    return failures


def _check_witness(f: SetFunction, check: WitnessCheck) -> list[str]:
    verdict = check_type(f, _subset(f, check.a), _subset(f, check.b), check.type)
    w: Witness | None = verdict.witness
    if w is None:
        return [f"{check.type} holds, expected a witness"]
    failures = []
    if w.target != _subset(f, check.target) or w.given != _subset(f, check.given):
        failures.append(
            f"witness is f({w.target}|{w.given}), "
            f"expected f({{{check.target}}}|{{{check.given}}})"
        )
    for label, got, want in (
        ("observed", w.observed, check.observed),
        ("expected", w.expected, check.expected),
    ):
        if want is not None and (
            msg := _differs(label, got, parse_number(want), f.absolute_tolerance)
        ):
            failures.append(msg)
    return failures


def _check_value(f: SetFunction, check: ValueCheck) -> list[str]:
    message = _differs(
        _describe(check), _quantity(f, check), parse_number(check.expected), f.absolute_tolerance
    )
    return [message] if message else []


def _check_compare(f: SetFunction, check: CompareCheck) -> list[str]:
    left, right = _quantity(f, check.left), _quantity(f, check.right)
    if values_equal(left, right, absolute=f.absolute_tolerance) == (check.relation == "equal"):
        return []
    return [
        f"{_describe(check.left)} = {format_value(left)} and "
        f"{_describe(check.right)} = {format_value(right)} should {check.relation}"
    ]


def _check_multiset(f: SetFunction, check: MultisetCheck) -> list[str]:
    verdict = check_multiset(f, [_subset(f, s) for s in check.sets], check.mode)
    failures = []
    if verdict.holds != (check.expect == "holds"):
        failures.append(f"{check.mode} independence {'holds' if verdict.holds else 'fails'}")
    if check.total_correlation is not None:
        if verdict.total_correlation is None:
            failures.append("no total correlation in a pairwise verdict")
        else:
            message = _differs(
                "C_f",
                verdict.total_correlation.value,
                parse_number(check.total_correlation),
                f.absolute_tolerance,
            )
            failures.extend([message] if message else [])
    return failures


def _check_union(f: SetFunction, check: UnionCheck) -> list[str]:
    report = check_union_nonclosure(
        f, _subset(f, check.a), _subset(f, check.b), _subset(f, check.c)
    )
    pairs = [
        ("I(A;B)", report.ab.value, check.ab),
        ("I(A;C)", report.ac.value, check.ac),
        ("I(A;B∪C)", report.a_bc.value, check.a_bc),
    ]
    absolute = f.absolute_tolerance
    return [
        msg
        for label, got, want in pairs
        if (msg := _differs(label, got, parse_number(want), absolute))
    ]


def _check_factorization(f: SetFunction, check: FactorizationCheck) -> list[str]:
    if not isinstance(f, EntropyFunction):
        return ["factorization checks need an entropy function"]
    verdict = check_statistical_independence(
        f.distribution, _subset(f, check.a), _subset(f, check.b)
    )
    if verdict.independent == check.independent:
        return []
    return [f"factorization independent={verdict.independent}, expected {check.independent}"]


def _check_markov(f: SetFunction, check: MarkovCheck) -> list[str]:
    if not isinstance(f, CoverageFunction):
        return ["Markov-chain checks need a coverage function"]
    cov = f.coverage
    report = check_markov_chain(
        cov, _subset(f, check.a), _subset(f, check.b), cov.universe.parse(check.b_u)
    )
    failures = []
    if report.preimage != _subset(f, check.preimage):
        failures.append(f"preimage {report.preimage}, expected {{{check.preimage}}}")
    message = _differs("I(A;preimage|B)", report.measure.value, parse_number(check.measure))
    failures.extend([message] if message else [])
    if report.holds != check.holds:
        failures.append(f"property_holds={report.holds}, expected {check.holds}")
    return failures


def _check_validation(f: SetFunction, check: ValidationCheck) -> list[str]:
    report = validate(f)
    failures = [
        f"{name}={got}, expected {want}"
        for name, got, want in (
            ("submodular", report.submodular.holds, check.submodular),
            ("monotone", report.monotone.holds, check.monotone),
            ("normalized", report.normalized.holds, check.normalized),
        )
        if got != want
    ]
    if check.witness is not None:
        found = report.submodular
        j = f.ground.label(found.element) if found.element is not None else None
        expected_t = _subset(f, check.witness.t) if check.witness.t is not None else None
        if (j, found.s, found.t) != (check.witness.j, _subset(f, check.witness.s), expected_t):
            failures.append(
                f"witness j={j}, S={found.s}, T={found.t}; expected j={check.witness.j}, "
                f"S={{{check.witness.s}}}, T={{{check.witness.t}}}"
            )
    return failures


_CHECKERS: dict[str, Callable[[SetFunction, Any], list[str]]] = {
    "classify": _check_classify,
    "witness": _check_witness,
    "value": _check_value,
    "compare": _check_compare,
    "multiset": _check_multiset,
    "union": _check_union,
    "factorization": _check_factorization,
    "markov": _check_markov,
    "validation": _check_validation,
}


def run_entry(entry: RegistryEntry) -> RegistryOutcome:
    try:
        f = build_function(entry.function, entry.id)
    except SubindError as exc:
        return RegistryOutcome(entry.id, entry.metadata.name, 0, (f"function: {exc}",))
    failures: list[str] = []
    for i, check in enumerate(entry.checks):
        try:
            failures.extend(f"#{i} {check.kind}: {msg}" for msg in _CHECKERS[check.kind](f, check))
        except InvariantViolationError:
            raise
        except SubindError as exc:
            failures.append(f"#{i} {check.kind}: raised {type(exc).__name__}: {exc}")
    if failures:
        logger.warning("Registry entry %s failed: %s", entry.id, "; ".join(failures))
    return RegistryOutcome(entry.id, entry.metadata.name, len(entry.checks), tuple(failures))


def run_registry(
    ids: Iterable[str] | None = None, directory: Path | None = None
) -> list[RegistryOutcome]:
    entries = load_registry(directory)
    if ids is not None:
        wanted = list(ids)
        known = {e.id for e in entries}
        unknown = [i for i in wanted if i not in known]
        if unknown:
            raise UnknownNameError(f"no registry entry {', '.join(map(repr, unknown))}")
        entries = [e for e in entries if e.id in wanted]
    return [run_entry(e) for e in entries]


def emit_registry(target: Path, directory: Path | None = None) -> list[Path]:
    """Write each entry's function as ``<id>.json`` spec files under ``target``."""
    target.mkdir(parents=True, exist_ok=True)
    written = []
    for entry in load_registry(directory):
        path = target / f"{entry.id}.json"
        dump_function(build_function(entry.function, entry.id), path)
        written.append(path)
    return written
