"""Exhaustive verification of the implication lattice between independence types."""

import logging
from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from functools import partial

from subind.config import get_settings
from subind.errors import InvariantViolationError
from subind.models.functions import SetFunction
from subind.models.reports import (
    IndependenceReport,
    IndependenceType,
    LatticeReport,
    LatticeViolation,
)
from subind.models.sets import Subset
from subind.services.enumeration import disjoint_pairs
from subind.services.independence import classify

logger = logging.getLogger(__name__)

# pairs handed to each worker process per task
CHUNK_SIZE = 64


def _classify_pair(f: SetFunction, pair: tuple[Subset, Subset]) -> IndependenceReport:
    return classify(f, pair[0], pair[1])


def classify_pairs(
    f: SetFunction, pairs: Iterable[tuple[Subset, Subset]]
) -> list[IndependenceReport]:
    """Classify every pair, fanning out over ``settings.workers`` processes.

    Reports come back in input order whatever the worker count.
    """
    pairs = list(pairs)
    workers = get_settings().workers
    if workers <= 1 or len(pairs) < 2 * CHUNK_SIZE:
        return [_classify_pair(f, pair) for pair in pairs]
    logger.debug("Classifying %d pairs on %d workers", len(pairs), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(partial(_classify_pair, f), pairs, chunksize=CHUNK_SIZE))


def verify_lattice(
    f: SetFunction, pairs: Iterable[tuple[Subset, Subset]] | str = "all"
) -> LatticeReport:
    """Check all seven implications on every pair; ``"all"`` means every disjoint pair.

    Violations on a validated submodular function raise InvariantViolationError;
    on other functions they are returned in the report.
    """
    if isinstance(pairs, str):
        if pairs != "all":
            raise ValueError(f"pairs must be 'all' or a sequence of pairs, got {pairs!r}")
        pairs = disjoint_pairs(f.ground)
    reports = classify_pairs(f, pairs)

    violations: list[LatticeViolation] = []
    counts = {t: 0 for t in IndependenceType}
    for index, report in enumerate(reports):
        for t in IndependenceType:
            counts[t] += report.holds(t)
        violations.extend(
            LatticeViolation(index, report.a, report.b, premise, conclusion)
            for premise, conclusion in report.violations
        )

    validated = f.validated_submodular
    result = LatticeReport(
        pairs_checked=len(reports),
        violations=tuple(violations),
        validated_submodular=validated,
        type_counts=counts,
    )
    if violations:
        if validated:
            for v in violations:
                logger.error("Lattice violation: %s", v.describe())
            raise InvariantViolationError(
                f"{len(violations)} lattice violation(s) on a validated submodular function; "
                f"first: {violations[0].describe()}"
            )
        logger.warning(
            "%d lattice violation(s) on a function that is not validated submodular",
            len(violations),
        )
    return result
