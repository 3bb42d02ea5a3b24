"""Result records returned by subind operations.

Records are immutable. ``to_payload`` gives the JSON-ready form used by the CLI
report; exact values render as fraction strings, floating ones as numbers.
"""

from dataclasses import dataclass, field
from enum import StrEnum
from typing import Any

from subind.models.sets import Subset
from subind.models.values import Value, format_value, json_value


class IndependenceType(StrEnum):
    JI = "JI"
    MI = "MI"
    PI = "PI"
    SMI = "SMI"
    MODI = "ModI"
    SMODI = "SModI"


class MultisetMode(StrEnum):
    MUTUAL = "mutual"
    PAIRWISE = "pairwise"


@dataclass(frozen=True)
class MeasureValue:
    value: Value
    exact: bool
    validated_submodular: bool

    @property
    def exactness(self) -> str:
        return "exact" if self.exact else "floating"

    def to_payload(self) -> dict[str, Any]:
        return {
            "value": json_value(self.value),
            "exactness": self.exactness,
            "validated_submodular": self.validated_submodular,
        }


@dataclass(frozen=True)
class Witness:
    """A failed equality f(target | given) = f(target): ``observed`` ≠ ``expected``."""

    target: Subset
    given: Subset
    observed: Value
    expected: Value

    def describe(self) -> str:
        return (
            f"f({self.target}|{self.given}) = {format_value(self.observed)} != "
            f"f({self.target}) = {format_value(self.expected)}"
        )

    def to_payload(self) -> dict[str, Any]:
        return {
            "target": self.target.text(),
            "given": self.given.text(),
            "observed": json_value(self.observed),
            "expected": json_value(self.expected),
        }


@dataclass(frozen=True)
class Verdict:
    """Outcome of one independence check; ``witness`` is set exactly when it fails."""

    label: str
    holds: bool
    witness: Witness | None = None

    def to_payload(self) -> dict[str, Any]:
        payload: dict[str, Any] = {"verdict": "holds" if self.holds else "fails"}
        if self.witness is not None:
            payload["witness"] = self.witness.to_payload()
        return payload


@dataclass(frozen=True)
class IndependenceReport:
    a: Subset
    b: Subset
    given: Subset | None
    verdicts: dict[IndependenceType, Verdict]
    exact: bool
    validated_submodular: bool
    violations: tuple[tuple[IndependenceType, IndependenceType], ...] = ()

    def holds(self, t: IndependenceType) -> bool:
        return self.verdicts[t].holds

    def to_payload(self) -> dict[str, Any]:
        return {
            "A": self.a.text(),
            "B": self.b.text(),
            "given": None if self.given is None else self.given.text(),
            "exactness": "exact" if self.exact else "floating",
            "validated_submodular": self.validated_submodular,
            "verdicts": {str(t): v.to_payload() for t, v in self.verdicts.items()},
            "lattice_violations": [f"{p} => {c}" for p, c in self.violations],
        }


@dataclass(frozen=True)
class PropertyCheck:
    """One validated property; a failing check carries a (j, S[, T]) witness."""

    holds: bool
    element: int | None = None
    s: Subset | None = None
    t: Subset | None = None
    values: tuple[Value, ...] = ()

    def to_payload(self) -> dict[str, Any]:
        payload: dict[str, Any] = {"holds": self.holds}
        if not self.holds:
            witness: dict[str, Any] = {}
            if self.element is not None and self.s is not None:
                witness["j"] = self.s.ground.label(self.element)
            if self.s is not None:
                witness["S"] = self.s.text()
            if self.t is not None:
                witness["T"] = self.t.text()
            witness["values"] = [json_value(v) for v in self.values]
            payload["witness"] = witness
        return payload


@dataclass(frozen=True)
class ValidationReport:
    submodular: PropertyCheck
    monotone: PropertyCheck
    normalized: PropertyCheck
    modular: PropertyCheck

    def to_payload(self) -> dict[str, Any]:
        return {
            "submodular": self.submodular.to_payload(),
            "monotone": self.monotone.to_payload(),
            "normalized": self.normalized.to_payload(),
            "modular": self.modular.to_payload(),
        }


@dataclass(frozen=True)
class LatticeViolation:
    pair_index: int
    a: Subset
    b: Subset
    premise: IndependenceType
    conclusion: IndependenceType

    def describe(self) -> str:
        return f"pair #{self.pair_index} ({self.a}, {self.b}): {self.premise} => {self.conclusion}"


@dataclass(frozen=True)
class LatticeReport:
    pairs_checked: int
    violations: tuple[LatticeViolation, ...]
    validated_submodular: bool
    type_counts: dict[IndependenceType, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_payload(self) -> dict[str, Any]:
        return {
            "pairs_checked": self.pairs_checked,
            "validated_submodular": self.validated_submodular,
            "holds_counts": {str(t): n for t, n in self.type_counts.items()},
            "violations": [v.describe() for v in self.violations],
        }


@dataclass(frozen=True)
class DataProcessingReport:
    conditional: MeasureValue
    i_ac: MeasureValue
    i_ab: MeasureValue
    i_cb: MeasureValue
    premise_holds: bool
    sufficient_condition: str | None
    conclusion_holds: bool | None

    def to_payload(self) -> dict[str, Any]:
        return {
            "I(A;C|B)": self.conditional.to_payload(),
            "I(A;C)": self.i_ac.to_payload(),
            "I(A;B)": self.i_ab.to_payload(),
            "I(C;B)": self.i_cb.to_payload(),
            "premise_holds": self.premise_holds,
            "sufficient_condition": self.sufficient_condition,
            "conclusion_holds": self.conclusion_holds,
        }


@dataclass(frozen=True)
class ConditionalIndependenceReport:
    measure: MeasureValue
    holds: bool
    characterizations: dict[str, tuple[Value, Value]]
    characterizations_agree: bool
    sufficient_condition: str | None

    def to_payload(self) -> dict[str, Any]:
        return {
            "I(A;C|B)": self.measure.to_payload(),
            "holds": self.holds,
            "characterizations": {
                name: [json_value(x), json_value(y)]
                for name, (x, y) in self.characterizations.items()
            },
            "characterizations_agree": self.characterizations_agree,
            "sufficient_condition": self.sufficient_condition,
        }


@dataclass(frozen=True)
class MarkovChainReport:
    preimage: Subset
    measure: MeasureValue
    holds: bool

    def to_payload(self) -> dict[str, Any]:
        return {
            "preimage": self.preimage.text(),
            "I(A;preimage|B)": self.measure.to_payload(),
            "property_holds": self.holds,
        }


@dataclass(frozen=True)
class MultisetVerdict:
    mode: MultisetMode
    holds: bool
    total_correlation: MeasureValue | None = None
    offending_pair: tuple[int, int] | None = None
    pair_verdict: Verdict | None = None

    def to_payload(self) -> dict[str, Any]:
        payload: dict[str, Any] = {
            "mode": str(self.mode),
            "verdict": "holds" if self.holds else "fails",
        }
        if self.total_correlation is not None:
            payload["total_correlation"] = self.total_correlation.to_payload()
        if self.offending_pair is not None:
            payload["offending_pair"] = list(self.offending_pair)
        if self.pair_verdict is not None:
            payload["pair_verdict"] = self.pair_verdict.to_payload()
        return payload


@dataclass(frozen=True)
class UnionReport:
    ab: MeasureValue
    ac: MeasureValue
    a_bc: MeasureValue
    holds_ab: bool
    holds_ac: bool
    holds_a_bc: bool

    def to_payload(self) -> dict[str, Any]:
        return {
            "I(A;B)": self.ab.to_payload(),
            "I(A;C)": self.ac.to_payload(),
            "I(A;B∪C)": self.a_bc.to_payload(),
            "verdicts": [self.holds_ab, self.holds_ac, self.holds_a_bc],
        }


@dataclass(frozen=True)
class FactorizationVerdict:
    """Whether P(X_A, X_B) = P(X_A) P(X_B); on failure the first offending cell."""

    independent: bool
    assignment: tuple[int, ...] | None = None
    joint: Value | None = None
    product: Value | None = None

    def to_payload(self) -> dict[str, Any]:
        payload: dict[str, Any] = {"independent": self.independent}
        if self.assignment is not None and self.joint is not None and self.product is not None:
            payload["witness"] = {
                "assignment": list(self.assignment),
                "joint": json_value(self.joint),
                "product": json_value(self.product),
            }
        return payload


@dataclass(frozen=True)
class ConstraintCheck:
    type: IndependenceType
    feasible: bool
    measured: MeasureValue
    epsilon: Value
    verdict: Verdict | None = None

    def to_payload(self) -> dict[str, Any]:
        payload: dict[str, Any] = {
            "type": str(self.type),
            "feasible": self.feasible,
            "I(A;P)": self.measured.to_payload(),
            "epsilon": json_value(self.epsilon),
        }
        if self.verdict is not None:
            payload["verdict"] = self.verdict.to_payload()
        return payload


@dataclass(frozen=True)
class SelectionStep:
    element: int
    gain: Value
    slack: Value | None = None


@dataclass(frozen=True)
class SelectionResult:
    selected: Subset
    utility: Value
    trace: tuple[SelectionStep, ...]
    feasible: bool
    check: ConstraintCheck | None = None

    def trace_payload(self) -> list[dict[str, Any]]:
        return [
            {
                "element": self.selected.ground.label(step.element),
                "gain": json_value(step.gain),
                "slack": None if step.slack is None else json_value(step.slack),
            }
            for step in self.trace
        ]

    def to_payload(self) -> dict[str, Any]:
        payload: dict[str, Any] = {
            "selected": self.selected.text(),
            "utility": json_value(self.utility),
            "feasible": self.feasible,
            "steps": self.trace_payload(),
        }
        if self.check is not None:
            payload["constraint"] = self.check.to_payload()
        return payload


@dataclass(frozen=True)
class RegistryOutcome:
    """Result of running every check of one registry entry."""

    entry_id: str
    name: str
    checks_run: int
    failures: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_payload(self) -> dict[str, Any]:
        return {
            "id": self.entry_id,
            "name": self.name,
            "status": "PASS" if self.passed else "FAIL",
            "checks": self.checks_run,
            "failures": list(self.failures),
        }
