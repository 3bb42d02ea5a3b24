"""Entropy as a set function, statistical independence, and the built-in
counterexample distributions."""

import logging
from fractions import Fraction

import numpy as np

from subind.config import get_settings
from subind.errors import InvariantViolationError, OverlapError, UnknownNameError
from subind.models.distribution import JointDistribution
from subind.models.functions import EntropyFunction
from subind.models.reports import FactorizationVerdict
from subind.models.sets import GroundSet, Subset
from subind.services.enumeration import check_cap
from subind.services.validation import validate

logger = logging.getLogger(__name__)

# entropy functions over at most this many variables are validated on construction
VALIDATION_LIMIT = 10


def entropy(dist: JointDistribution, a: Subset) -> float:
    """H(X_A) in bits."""
    dist.marginal(a)
    return dist.entropy_of(a.mask)


def conditional_entropy(dist: JointDistribution, a: Subset, b: Subset) -> float:
    """H(X_A | X_B) = H(X_{A∪B}) - H(X_B)."""
    dist.marginal(a)
    dist.marginal(b)
    return dist.entropy_of(a.mask | b.mask) - dist.entropy_of(b.mask)


def make_entropy_function(dist: JointDistribution) -> EntropyFunction:
    """Wrap ``dist`` as the set function A ↦ H(X_A)."""
    check_cap(dist.variables.n, "variable set")
    f = EntropyFunction(dist)
    if dist.variables.n <= VALIDATION_LIMIT:
        report = validate(f)
        if not (report.submodular.holds and report.monotone.holds and report.normalized.holds):
            raise InvariantViolationError(f"entropy failed validation: {report.to_payload()}")
    return f


def check_statistical_independence(
    dist: JointDistribution, a: Subset, b: Subset
) -> FactorizationVerdict:
    """Compare P(X_A, X_B) with P(X_A) P(X_B) cell by cell.

    Exact tables are compared exactly, floating ones with the configured
    absolute tolerance. Cells run in row-major order over A's variables then
    B's, and the first mismatch is the witness.
    """
    shared = a.intersection(b)
    if shared:
        raise OverlapError(f"A and B share {shared}; remove the intersection first")
    joint = dist.marginal(a | b)
    union = list((a | b).indices)
    order = [union.index(i) for i in a.indices + b.indices]
    joint = joint.transpose(order) if order else joint
    product = np.multiply.outer(dist.marginal(a), dist.marginal(b))
    tol = get_settings().tolerance
    for cell in np.ndindex(*joint.shape):
        p, q = joint[cell], product[cell]
        same = p == q if dist.exact else abs(float(p) - float(q)) <= tol
        if not same:
            return FactorizationVerdict(
                independent=False, assignment=tuple(int(v) for v in cell), joint=p, product=q
            )
    return FactorizationVerdict(independent=True)


def _d1() -> JointDistribution:
    pair = {
        (0, 0): Fraction(1, 4),
        (0, 1): Fraction(1, 8),
        (1, 0): Fraction(1, 8),
        (1, 1): Fraction(1, 2),
    }
    pmf = {(x1, x2, x3): p * Fraction(1, 2) for (x1, x2), p in pair.items() for x3 in (0, 1)}
    return JointDistribution(GroundSet.of(["X1", "X2", "X3"]), (2, 2, 2), pmf)


def _d2() -> JointDistribution:
    pmf = {
        (x1, x2, x3, x1 ^ x2 ^ x3): Fraction(1, 8)
        for x1 in (0, 1)
        for x2 in (0, 1)
        for x3 in (0, 1)
    }
    return JointDistribution(GroundSet.of(["X1", "X2", "X3", "X4"]), (2, 2, 2, 2), pmf)


def _d3() -> JointDistribution:
    pmf = {x: Fraction(1, 4) for x in [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)]}
    return JointDistribution(GroundSet.of(["X1", "X2", "X3"]), (2, 2, 2), pmf)


BUILTIN_DISTRIBUTIONS = {"D1": _d1, "D2": _d2, "D3": _d3}


def builtin_distribution(name: str) -> JointDistribution:
    """D1: (X1,X2) correlated, X3 a fair bit independent of both.
    D2: X4 = X1 ⊕ X2 ⊕ X3 over three fair bits (even parity).
    D3: X3 = X1 ⊕ X2 over two fair bits.
    """
    try:
        return BUILTIN_DISTRIBUTIONS[name]()
    except KeyError:
        raise UnknownNameError(
            f"unknown built-in distribution {name!r}; choose one of "
            f"{', '.join(BUILTIN_DISTRIBUTIONS)}"
        ) from None
