"""Discrete joint distributions over labelled variables."""

from collections.abc import Mapping
from fractions import Fraction

import numpy as np
import scipy.stats

from subind.errors import GroundMismatchError
from subind.models.sets import GroundSet, Subset, iter_bits
from subind.models.values import Value, is_exact

PMF_TOLERANCE = 1e-12


class JointDistribution:
    """A joint PMF over ``variables`` stored as a dense probability table.

    The table has one axis per variable (axis ``i`` has length ``arities[i]``)
    and holds ``Fraction`` cells when every probability was given exactly, so
    marginals stay exact; floats appear only inside the logarithms of
    ``entropy_of``.
    """

    def __init__(
        self,
        variables: GroundSet,
        arities: tuple[int, ...],
        pmf: Mapping[tuple[int, ...], Value],
    ) -> None:
        if len(arities) != variables.n:
            raise ValueError(
                f"{variables.n} variables but {len(arities)} arities were given"
            )
        if any(a < 1 for a in arities):
            raise ValueError(f"arities must be >= 1, got {list(arities)}")
        self.variables = variables
        self.arities = tuple(arities)
        self.exact = is_exact(*pmf.values())
        zero: Value = Fraction(0) if self.exact else 0.0
        table = np.full(self.arities, zero, dtype=object if self.exact else float)
        for x, p in pmf.items():
            if len(x) != variables.n or any(not 0 <= v < a for v, a in zip(x, arities)):
                raise ValueError(f"assignment {list(x)} does not respect arities {list(arities)}")
            if p < 0:
                raise ValueError(f"negative probability {p} for assignment {list(x)}")
            table[tuple(x)] += p if self.exact else float(p)
        total = table.sum()
        if self.exact and total != 1:
            raise ValueError(f"probabilities sum to {total}, not 1")
        if not self.exact and abs(float(total) - 1.0) > PMF_TOLERANCE:
            raise ValueError(f"probabilities sum to {float(total)!r}, not 1")
        self._table = table
        self._entropies: dict[int, float] = {}

    @property
    def table(self) -> np.ndarray:
        view = self._table.view()
        view.flags.writeable = False
        return view

    def support(self) -> dict[tuple[int, ...], Value]:
        """Assignments with nonzero probability, in row-major order."""
        return {
            tuple(int(v) for v in x): self._table[x]
            for x in np.ndindex(*self.arities)
            if self._table[x] != 0
        }

    def _require(self, subset: Subset) -> None:
        if subset.ground != self.variables:
            raise GroundMismatchError("subset is not over this distribution's variables")

    def marginal_of(self, mask: int) -> np.ndarray:
        """Marginal table over the variables in ``mask``, axes in index order."""
        drop = tuple(i for i in range(self.variables.n) if not mask >> i & 1)
        return np.asarray(self._table.sum(axis=drop), dtype=self._table.dtype)

    def marginal(self, subset: Subset) -> np.ndarray:
        self._require(subset)
        return self.marginal_of(subset.mask)

    def entropy_of(self, mask: int) -> float:
        """Shannon entropy in bits of the variables in ``mask`` (0·log 0 = 0)."""
        cached = self._entropies.get(mask)
        if cached is None:
            if mask == 0:
                cached = 0.0
            else:
                p = self.marginal_of(mask).astype(float).ravel()
                cached = float(scipy.stats.entropy(p, base=2))
            self._entropies[mask] = cached
        return cached

    def axes_of(self, mask: int) -> list[int]:
        return list(iter_bits(mask))
