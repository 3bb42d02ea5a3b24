"""Submodular information measures: conditional mutual information, total
correlation and multi-set mutual information."""

import logging
from collections.abc import Sequence

from subind.config import get_settings
from subind.errors import PreconditionError
from subind.models.functions import SetFunction
from subind.models.reports import ConditionalIndependenceReport, MeasureValue
from subind.models.sets import Subset
from subind.models.values import Value, is_zero, values_equal, zero_for

logger = logging.getLogger(__name__)


def _measure(f: SetFunction, value: Value) -> MeasureValue:
    validated = f.validated_submodular
    if not validated:
        logger.warning("Measuring with a function that is not validated submodular")
    return MeasureValue(value=value, exact=f.exact, validated_submodular=validated)


def mutual_information_of(f: SetFunction, a: int, b: int, c: int = 0) -> Value:
    """I_f(A; B | C) on raw masks."""
    return f.gain_of(a, c) + f.gain_of(b, c) - f.gain_of(a | b, c)


def mutual_information(
    f: SetFunction, a: Subset, b: Subset, c: Subset | None = None
) -> MeasureValue:
    """I_f(A; B | C) = f(A|C) + f(B|C) - f(A ∪ B | C); C defaults to ∅."""
    c = c if c is not None else f.ground.empty()
    f.require(a, b, c)
    return _measure(f, mutual_information_of(f, a.mask, b.mask, c.mask))


def total_correlation(f: SetFunction, sets: Sequence[Subset]) -> MeasureValue:
    """C_f(A_1; ...; A_k) = Σ_i f(A_i) - f(∪_i A_i)."""
    if not sets:
        raise PreconditionError("total correlation needs at least one set")
    f.require(*sets)
    total = zero_for(f.exact)
    union = 0
    for s in sets:
        total += f.value_of(s.mask)
        union |= s.mask
    return _measure(f, total - f.value_of(union))


def multiset_mutual_information(f: SetFunction, sets: Sequence[Subset]) -> MeasureValue:
    """I_f(A_1; ...; A_k) = -Σ_{T ⊆ [k]} (-1)^{|T|} f(∪_{i∈T} A_i).

    Repeated sets are kept. Terms are summed in ascending order of the index
    mask of T, so floating results do not depend on evaluation order.
    """
    k = len(sets)
    cap = get_settings().multiset_cap
    if not 1 <= k <= cap:
        raise PreconditionError(f"multi-set mutual information needs 1..{cap} sets, got {k}")
    f.require(*sets)
    masks = [s.mask for s in sets]
    unions = [0] * (1 << k)
    total = zero_for(f.exact)
    for t in range(1, 1 << k):
        low = t & -t
        unions[t] = unions[t ^ low] | masks[low.bit_length() - 1]
        term = f.value_of(unions[t])
        # -(-1)^{|T|}: odd |T| adds, even |T| subtracts
        total = total + term if t.bit_count() % 2 else total - term
    return _measure(f, total)


def _sufficient_condition(a: Subset, b: Subset, c: Subset) -> str | None:
    if not c:
        return "C = ∅"
    if a.issubset(b):
        return "A ⊆ B"
    if c.issubset(b):
        return "C ⊆ B"
    return None


def conditional_independence(
    f: SetFunction, a: Subset, c: Subset, given: Subset
) -> ConditionalIndependenceReport:
    """Decide A ⊥_f C | B and cross-check the equivalent characterizations.

    A ⊥ C | B iff I_f(A;C|B) = 0, equivalently I_f(A; B∪C) = I_f(A; B) and
    I_f(C; A∪B) = I_f(C; B), equivalently f(A|B) = f(A|B∪C) and f(C|B) = f(C|A∪B).
    """
    b = given
    f.require(a, b, c)
    measure = mutual_information(f, a, c, b)
    holds = is_zero(measure.value, absolute=f.absolute_tolerance)
    forms: dict[str, tuple[Value, Value]] = {
        "I(A;B∪C) = I(A;B)": (
            mutual_information_of(f, a.mask, b.mask | c.mask),
            mutual_information_of(f, a.mask, b.mask),
        ),
        "I(C;A∪B) = I(C;B)": (
            mutual_information_of(f, c.mask, a.mask | b.mask),
            mutual_information_of(f, c.mask, b.mask),
        ),
        "f(A|B) = f(A|B∪C)": (f.gain_of(a.mask, b.mask), f.gain_of(a.mask, b.mask | c.mask)),
        "f(C|B) = f(C|A∪B)": (f.gain_of(c.mask, b.mask), f.gain_of(c.mask, a.mask | b.mask)),
    }
    agree = all(
        values_equal(x, y, absolute=f.absolute_tolerance) == holds for x, y in forms.values()
    )
    return ConditionalIndependenceReport(
        measure=measure,
        holds=holds,
        characterizations=forms,
        characterizations_agree=agree,
        sufficient_condition=_sufficient_condition(a, b, c),
    )
