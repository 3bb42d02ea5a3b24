"""Independence-constrained subset selection.

Maximize a monotone utility g(A) subject to A being independent of a private
set P under a privacy function f. MI and PI are handled by filtering the
ground set up front; JI is relaxed to I_f(A; P) <= epsilon and enforced as an
admissibility test inside greedy.
"""

import logging
from collections.abc import Callable
from dataclasses import dataclass

from subind.errors import GroundMismatchError, OverlapError, PreconditionError
from subind.models.functions import SetFunction
from subind.models.reports import (
    ConstraintCheck,
    IndependenceType,
    SelectionResult,
    SelectionStep,
)
from subind.models.sets import Subset, iter_bits
from subind.models.values import ZERO, Value, is_positive, value_leq, values_equal
from subind.services.independence import check_type
from subind.services.measures import mutual_information, mutual_information_of

logger = logging.getLogger(__name__)

CONSTRAINT_TYPES = frozenset({IndependenceType.JI, IndependenceType.MI, IndependenceType.PI})

# called with the mask A ∪ {a}; returns (admissible, slack to record)
Admissibility = Callable[[int], tuple[bool, Value | None]]


@dataclass(frozen=True)
class ConstraintSpec:
    """The constraint A ⊥_f P of the given type, at most ``budget`` elements."""

    f: SetFunction
    private: Subset
    type: IndependenceType
    epsilon: Value = ZERO
    budget: int = 0

    def __post_init__(self) -> None:
        self.f.require(self.private)
        if self.type not in CONSTRAINT_TYPES:
            raise PreconditionError(
                f"selection supports JI, MI and PI constraints, not {self.type}"
            )
        if self.epsilon < 0:
            raise PreconditionError(f"epsilon must be nonnegative, got {self.epsilon}")
        if self.budget < 0:
            raise PreconditionError(f"budget must be nonnegative, got {self.budget}")


def filter_ground_set(f: SetFunction, private: Subset, t: IndependenceType) -> Subset:
    """Elements outside P that satisfy the one-sided element condition.

    MI keeps a with f(a|P) = f(a); PI keeps a with f(a|{b}) = f(a) for every b ∈ P.
    """
    f.require(private)
    if t not in (IndependenceType.MI, IndependenceType.PI):
        raise PreconditionError(f"ground-set filtering applies to MI and PI, not {t}")
    givens = [private.mask] if t is IndependenceType.MI else [1 << b for b in private.indices]
    absolute = f.absolute_tolerance
    mask = 0
    for a in iter_bits(private.complement().mask):
        alone = f.value_of(1 << a)
        gains = (f.gain_of(1 << a, given) for given in givens)
        if all(values_equal(gain, alone, absolute=absolute) for gain in gains):
            mask |= 1 << a
    return Subset(f.ground, mask)


def _greedy(
    g: SetFunction, candidates: int, budget: int, admissible: Admissibility | None = None
) -> tuple[int, list[SelectionStep]]:
    selected = 0
    steps: list[SelectionStep] = []
    while len(steps) < budget:
        best: tuple[Value, int, Value | None] | None = None
        for a in iter_bits(candidates & ~selected):
            gain = g.gain_of(1 << a, selected)
            # ascending scan, so an equal gain never displaces a lower index
            if best is not None and value_leq(gain, best[0], absolute=g.absolute_tolerance):
                continue
            slack = None
            if admissible is not None:
                ok, slack = admissible(selected | 1 << a)
                if not ok:
                    continue
            best = (gain, a, slack)
        if best is None or not is_positive(best[0], absolute=g.absolute_tolerance):
            break
        gain, a, slack = best
        selected |= 1 << a
        steps.append(SelectionStep(element=a, gain=gain, slack=slack))
        logger.debug("Greedy step %d: +%s gain %s slack %s", len(steps), a, gain, slack)
    return selected, steps


def _within_epsilon(f: SetFunction, private: Subset, epsilon: Value) -> Admissibility:
    def admissible(mask: int) -> tuple[bool, Value | None]:
        slack = mutual_information_of(f, mask, private.mask)
        return value_leq(slack, epsilon, absolute=f.absolute_tolerance), slack

    return admissible


def greedy_maximize(g: SetFunction, candidates: Subset, budget: int) -> SelectionResult:
    """Standard greedy: add the best marginal gain until the budget or no positive gain."""
    g.require(candidates)
    if budget < 0:
        raise PreconditionError(f"budget must be nonnegative, got {budget}")
    selected, steps = _greedy(g, candidates.mask, budget)
    return SelectionResult(
        selected=Subset(g.ground, selected),
        utility=g.value_of(selected),
        trace=tuple(steps),
        feasible=True,
    )


def verify_constraint(
    f: SetFunction,
    a: Subset,
    private: Subset,
    t: IndependenceType,
    epsilon: Value = ZERO,
) -> ConstraintCheck:
    """Independently check A against P: I_f(A;P) <= epsilon for JI, the two-sided
    check for MI and PI. The measured I_f(A;P) is reported for every type."""
    f.require(a, private)
    shared = a.intersection(private)
    if shared:
        raise OverlapError(f"A and P share {shared}; remove the intersection first")
    measured = mutual_information(f, a, private)
    if t is IndependenceType.JI:
        return ConstraintCheck(
            type=t,
            feasible=value_leq(measured.value, epsilon, absolute=f.absolute_tolerance),
            measured=measured,
            epsilon=epsilon,
        )
    if t not in CONSTRAINT_TYPES:
        raise PreconditionError(f"selection supports JI, MI and PI constraints, not {t}")
    verdict = check_type(f, a, private, t)
    return ConstraintCheck(
        type=t, feasible=verdict.holds, measured=measured, epsilon=epsilon, verdict=verdict
    )


def constrained_select(g: SetFunction, spec: ConstraintSpec) -> SelectionResult:
    """Greedy under the constraint in ``spec``, re-verified before returning."""
    f, private = spec.f, spec.private
    if g.ground != f.ground:
        raise GroundMismatchError("utility and privacy functions must share a ground set")

    admissible: Admissibility | None = None
    if spec.type is IndependenceType.JI:
        candidates = private.complement()
        admissible = _within_epsilon(f, private, spec.epsilon)
    else:
        candidates = filter_ground_set(f, private, spec.type)
    logger.debug("Selecting from %d candidates under %s", len(candidates), spec.type)

    selected, steps = _greedy(g, candidates.mask, spec.budget, admissible)
    chosen = Subset(g.ground, selected)
    check = verify_constraint(f, chosen, private, spec.type, spec.epsilon)
    if not check.feasible:
        logger.warning("Selected set %s fails the %s constraint on re-check", chosen, spec.type)
    return SelectionResult(
        selected=chosen,
        utility=g.value_of(selected),
        trace=tuple(steps),
        feasible=check.feasible,
        check=check,
    )
