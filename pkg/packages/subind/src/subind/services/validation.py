"""Brute-force validation of submodularity, monotonicity and normalization."""

import logging

from subind.models.functions import SetFunction
from subind.models.reports import PropertyCheck, ValidationReport
from subind.models.sets import Subset, iter_bits
from subind.models.values import ZERO, is_zero, value_leq, values_equal
from subind.services.enumeration import check_cap, iter_submasks

logger = logging.getLogger(__name__)


def validate(f: SetFunction) -> ValidationReport:
    """Check f exhaustively over its ground set.

    Submodularity is the diminishing-returns condition f(j|S) >= f(j|T) for all
    S ⊆ T and j ∉ T; T runs in enumeration order, then S ⊆ T, then j ascending,
    and the first failure becomes the witness (j, S, T).
    """
    ground = f.ground
    check_cap(ground.n, "ground set")
    full = (1 << ground.n) - 1
    logger.debug("Validating %r over %d subsets", f, 1 << ground.n)

    absolute = f.absolute_tolerance
    empty_value = f.value_of(0)
    normalized = (
        PropertyCheck(True)
        if is_zero(empty_value, absolute=absolute)
        else PropertyCheck(False, s=ground.empty(), values=(empty_value,))
    )

    monotone: PropertyCheck | None = None
    modular: PropertyCheck | None = None
    for s in iter_submasks(full):
        for j in iter_bits(full & ~s):
            gain = f.gain_of(1 << j, s)
            if monotone is None and not value_leq(ZERO, gain, absolute=absolute):
                monotone = PropertyCheck(False, element=j, s=Subset(ground, s), values=(gain,))
            if modular is None and not values_equal(gain, f.value_of(1 << j), absolute=absolute):
                modular = PropertyCheck(
                    False, element=j, s=Subset(ground, s), values=(gain, f.value_of(1 << j))
                )

    submodular = _diminishing_returns_failure(f, full)

    return ValidationReport(
        submodular=submodular or PropertyCheck(True),
        monotone=monotone or PropertyCheck(True),
        normalized=normalized,
        modular=modular or PropertyCheck(True),
    )


def _diminishing_returns_failure(f: SetFunction, full: int) -> PropertyCheck | None:
    for t in iter_submasks(full):
        outside = list(iter_bits(full & ~t))
        for s in iter_submasks(t):
            for j in outside:
                small, large = f.gain_of(1 << j, s), f.gain_of(1 << j, t)
                if not value_leq(large, small, absolute=f.absolute_tolerance):
                    return PropertyCheck(
                        False,
                        element=j,
                        s=Subset(f.ground, s),
                        t=Subset(f.ground, t),
                        values=(small, large),
                    )
    return None
