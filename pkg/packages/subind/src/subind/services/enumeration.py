"""Deterministic subset enumeration for brute-force verification.

Order everywhere is by cardinality, then lexicographic on element indices, so
witnesses in reports are reproducible.
"""

import logging
from collections.abc import Iterator
from itertools import combinations

from subind.config import get_settings
from subind.errors import EnumerationCapError
from subind.models.sets import GroundSet, Subset, iter_bits

logger = logging.getLogger(__name__)


def check_cap(size: int, what: str) -> None:
    cap = get_settings().enumeration_cap
    if size > cap:
        raise EnumerationCapError(
            f"{what} has {size} elements; enumerating its 2^{size} subsets exceeds the "
            f"cap of {cap} (set SUBIND_ENUMERATION_CAP to raise it)"
        )


def iter_submasks(mask: int, max_cardinality: int | None = None) -> Iterator[int]:
    """Every submask of ``mask`` in enumeration order, without a cap check."""
    bits = list(iter_bits(mask))
    top = len(bits) if max_cardinality is None else min(max_cardinality, len(bits))
    for size in range(top + 1):
        for combo in combinations(bits, size):
            sub = 0
            for i in combo:
                sub |= 1 << i
            yield sub


def subsets_of(ground: GroundSet, max_cardinality: int | None = None) -> Iterator[Subset]:
    """Yield every subset of ``ground`` (up to ``max_cardinality``) exactly once."""
    check_cap(ground.n, "ground set")
    logger.debug("Enumerating subsets of a %d-element ground set", ground.n)
    for mask in iter_submasks((1 << ground.n) - 1, max_cardinality):
        yield Subset(ground, mask)


def subsets_within(s: Subset, max_cardinality: int | None = None) -> Iterator[Subset]:
    """Yield every X ⊆ s in enumeration order."""
    check_cap(len(s), f"set {s}")
    for mask in iter_submasks(s.mask, max_cardinality):
        yield Subset(s.ground, mask)


def disjoint_pairs(ground: GroundSet) -> Iterator[tuple[Subset, Subset]]:
    """Every ordered pair (A, B) of disjoint subsets, A in enumeration order first."""
    for a in subsets_of(ground):
        for b in subsets_within(a.complement()):
            yield a, b
