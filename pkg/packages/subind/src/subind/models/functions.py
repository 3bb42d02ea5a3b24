"""Normalized set functions f: 2^Ω → ℝ and the families subind ships.

Every family evaluates through ``value_of(mask)``, which memoizes per mask.
Exact families (integer/rational parameters) return ``Fraction``; entropy and
facility location over real similarities return ``float``.
"""

import logging
from abc import ABC, abstractmethod
from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from functools import cached_property

import numpy as np

from subind.errors import GroundMismatchError
from subind.models.distribution import JointDistribution
from subind.models.sets import GroundSet, Subset, iter_bits
from subind.models.values import ZERO, Value, is_exact, values_equal

logger = logging.getLogger(__name__)


class Family(StrEnum):
    MODULAR = "modular"
    COVERAGE = "coverage"
    TRUNCATED_CARDINALITY = "truncated_cardinality"
    FACILITY_LOCATION = "facility_location"
    ENTROPY = "entropy"
    TABULATED = "tabulated"
    CONDITIONED = "conditioned"


class SetFunction(ABC):
    """A pure, normalized set function over ``ground``."""

    family: Family

    def __init__(self, ground: GroundSet) -> None:
        self.ground = ground
        # memo writes are idempotent, so sharing an instance between threads is safe
        self._memo: dict[int, Value] = {}

    @property
    @abstractmethod
    def exact(self) -> bool:
        """True when values are exact rationals."""

    @property
    def validated_submodular(self) -> bool:
        """True when f is known to be monotone, normalized and submodular."""
        return True

    @property
    def absolute_tolerance(self) -> bool:
        """True when floating values on f are compared with an absolute slack."""
        return False

    @abstractmethod
    def _compute(self, mask: int) -> Value:
        """Value of the subset encoded by ``mask``."""

    def value_of(self, mask: int) -> Value:
        value = self._memo.get(mask)
        if value is None:
            value = self._compute(mask)
            self._memo[mask] = value
        return value

    def gain_of(self, mask: int, given: int) -> Value:
        """f(mask | given) on raw masks."""
        return self.value_of(mask | given) - self.value_of(given)

    def require(self, *subsets: Subset) -> None:
        for s in subsets:
            if s.ground is not self.ground and s.ground != self.ground:
                raise GroundMismatchError(
                    f"subset {s} is not over the ground set of this {self.family} function"
                )

    def evaluate(self, s: Subset) -> Value:
        self.require(s)
        return self.value_of(s.mask)

    def conditional_gain(self, a: Subset, c: Subset) -> Value:
        """f(A | C) = f(A ∪ C) - f(C)."""
        self.require(a, c)
        return self.gain_of(a.mask, c.mask)

    def condition_on(self, given: Subset) -> "SetFunction":
        """g(·) = f(· | given); returns ``self`` when ``given`` is empty."""
        self.require(given)
        if not given:
            return self
        return ConditionedFunction(self, given)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.ground.n})"


class ModularFunction(SetFunction):
    """f(A) = Σ_{a∈A} w(a)."""

    family = Family.MODULAR

    def __init__(self, ground: GroundSet, weights: Sequence[Value]) -> None:
        super().__init__(ground)
        if len(weights) != ground.n:
            raise ValueError(f"expected {ground.n} weights, got {len(weights)}")
        if any(w < 0 for w in weights):
            raise ValueError("modular weights must be nonnegative")
        self.weights = tuple(weights)
        self._exact = is_exact(*self.weights)

    @property
    def exact(self) -> bool:
        return self._exact

    def _compute(self, mask: int) -> Value:
        total: Value = ZERO if self._exact else 0.0
        for i in iter_bits(mask):
            total += self.weights[i]
        return total


@dataclass(frozen=True)
class CoverageMap:
    """γ: Ω → 2^U with nonnegative concept weights w."""

    ground: GroundSet
    universe: GroundSet
    gamma: tuple[Subset, ...]
    weights: tuple[Value, ...]

    def __post_init__(self) -> None:
        if len(self.gamma) != self.ground.n:
            raise ValueError(f"expected γ for {self.ground.n} elements, got {len(self.gamma)}")
        if len(self.weights) != self.universe.n:
            raise ValueError(
                f"expected {self.universe.n} concept weights, got {len(self.weights)}"
            )
        for image in self.gamma:
            if image.ground != self.universe:
                raise GroundMismatchError("γ images must be subsets of the concept universe")
        if any(w < 0 for w in self.weights):
            raise ValueError("concept weights must be nonnegative")

    @classmethod
    def build(
        cls,
        ground: GroundSet,
        gamma: dict[str, Sequence[str]],
        concepts: Sequence[str] | None = None,
        weights: dict[str, Value] | None = None,
    ) -> "CoverageMap":
        """Build from label maps; unlisted elements cover nothing, unlisted weights are 1."""
        if concepts is None:
            seen: dict[str, None] = {}
            for label in ground.labels:
                for c in gamma.get(label, ()):
                    seen.setdefault(c)
            concepts = list(seen)
        universe = GroundSet.of(concepts)
        for label in gamma:
            ground.index(label)
        images = tuple(universe.subset(gamma.get(label, ())) for label in ground.labels)
        weights = weights or {}
        for c in weights:
            universe.index(c)
        return cls(
            ground,
            universe,
            images,
            tuple(weights.get(c, Fraction(1)) for c in universe.labels),
        )

    @cached_property
    def exact(self) -> bool:
        return is_exact(*self.weights)

    def image_of(self, mask: int) -> int:
        """Concept mask γ(A) for the element mask A."""
        covered = 0
        for i in iter_bits(mask):
            covered |= self.gamma[i].mask
        return covered

    def image(self, s: Subset) -> Subset:
        return Subset(self.universe, self.image_of(s.mask))

    def weight_of(self, concept_mask: int) -> Value:
        total: Value = ZERO if self.exact else 0.0
        for c in iter_bits(concept_mask):
            total += self.weights[c]
        return total

    def preimage_of(self, concept_mask: int) -> int:
        """Elements whose γ meets ``concept_mask``."""
        mask = 0
        for i, image in enumerate(self.gamma):
            if image.mask & concept_mask:
                mask |= 1 << i
        return mask


class CoverageFunction(SetFunction):
    """f(A) = w(γ(A)), the weighted set-cover function."""

    family = Family.COVERAGE

    def __init__(self, coverage: CoverageMap) -> None:
        super().__init__(coverage.ground)
        self.coverage = coverage

    @property
    def exact(self) -> bool:
        return self.coverage.exact

    def _compute(self, mask: int) -> Value:
        return self.coverage.weight_of(self.coverage.image_of(mask))


class TruncatedCardinality(SetFunction):
    """f(A) = min(|A|, k), the rank function of the uniform matroid."""

    family = Family.TRUNCATED_CARDINALITY

    def __init__(self, ground: GroundSet, k: int) -> None:
        super().__init__(ground)
        if k < 1:
            raise ValueError(f"truncation level k must be >= 1, got {k}")
        self.k = k

    @property
    def exact(self) -> bool:
        return True

    def _compute(self, mask: int) -> Value:
        return Fraction(min(mask.bit_count(), self.k))


class FacilityLocation(SetFunction):
    """f(A) = Σ_{i∈Ω} max_{a∈A} s(i, a), with the max over ∅ taken as 0."""

    family = Family.FACILITY_LOCATION

    def __init__(self, ground: GroundSet, similarity: Sequence[Sequence[Value]]) -> None:
        super().__init__(ground)
        rows = [list(row) for row in similarity]
        if len(rows) != ground.n or any(len(row) != ground.n for row in rows):
            raise ValueError(f"similarity must be a {ground.n}x{ground.n} matrix")
        cells = [v for row in rows for v in row]
        if any(v < 0 for v in cells):
            raise ValueError("similarities must be nonnegative")
        self._exact = is_exact(*cells)
        self.similarity = np.array(rows, dtype=object if self._exact else float).reshape(
            ground.n, ground.n
        )

    @property
    def exact(self) -> bool:
        return self._exact

    def _compute(self, mask: int) -> Value:
        if not mask:
            return ZERO if self._exact else 0.0
        best = self.similarity[:, list(iter_bits(mask))].max(axis=1).sum()
        return Fraction(best) if self._exact else float(best)


class EntropyFunction(SetFunction):
    """f(A) = H(X_A) in bits for a joint distribution over the ground variables."""

    family = Family.ENTROPY

    def __init__(self, distribution: JointDistribution) -> None:
        super().__init__(distribution.variables)
        self.distribution = distribution

    @property
    def exact(self) -> bool:
        return False

    @property
    def absolute_tolerance(self) -> bool:
        return True

    def _compute(self, mask: int) -> Value:
        return self.distribution.entropy_of(mask)


class TabulatedFunction(SetFunction):
    """An explicit value per subset, indexed by mask; need not be submodular."""

    family = Family.TABULATED

    def __init__(self, ground: GroundSet, values: Sequence[Value]) -> None:
        super().__init__(ground)
        if len(values) != 1 << ground.n:
            raise ValueError(f"expected {1 << ground.n} values, got {len(values)}")
        if not values_equal(values[0], ZERO):
            raise ValueError(f"tabulated functions must satisfy f(∅) = 0, got {values[0]}")
        self.values = tuple(values)
        self._exact = is_exact(*self.values)
        self._validated: bool | None = None

    @property
    def exact(self) -> bool:
        return self._exact

    @property
    def validated_submodular(self) -> bool:
        if self._validated is None:
            from subind.services.validation import validate

            report = validate(self)
            self._validated = report.submodular.holds and report.monotone.holds and (
                report.normalized.holds
            )
            if not self._validated:
                logger.warning("Tabulated function is not monotone submodular: %s", report)
        return self._validated

    def _compute(self, mask: int) -> Value:
        return self.values[mask]


class ConditionedFunction(SetFunction):
    """g(S) = f(S | C) for a fixed base function f and given set C."""

    family = Family.CONDITIONED

    def __init__(self, base: SetFunction, given: Subset) -> None:
        super().__init__(base.ground)
        base.require(given)
        self.base = base
        self.given = given

    @property
    def exact(self) -> bool:
        return self.base.exact

    @property
    def validated_submodular(self) -> bool:
        return self.base.validated_submodular

    @property
    def absolute_tolerance(self) -> bool:
        return self.base.absolute_tolerance

    def _compute(self, mask: int) -> Value:
        return self.base.gain_of(mask, self.given.mask)
