"""Test fixtures and configuration."""

from fractions import Fraction

import pytest

from subind.config import reset_settings
from subind.models.functions import (
    CoverageFunction,
    CoverageMap,
    ModularFunction,
    TabulatedFunction,
    TruncatedCardinality,
)
from subind.models.sets import GroundSet


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Every test starts from default settings, ignoring the caller's SUBIND_* variables."""
    for name in ("TOLERANCE", "ENUMERATION_CAP", "MULTISET_CAP", "WORKERS", "LOG_LEVEL"):
        monkeypatch.delenv(f"SUBIND_{name}", raising=False)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def triple() -> GroundSet:
    return GroundSet.of(["1", "2", "3"])


@pytest.fixture
def coverage(triple) -> CoverageFunction:
    """γ(1) = {c1,c2}, γ(2) = {c1}, γ(3) = {c3}, unit weights."""
    return CoverageFunction(
        CoverageMap.build(triple, {"1": ["c1", "c2"], "2": ["c1"], "3": ["c3"]})
    )


@pytest.fixture
def extended_coverage() -> CoverageFunction:
    """The coverage triple plus element 4 with γ(4) = {c3,c4}."""
    ground = GroundSet.of(["1", "2", "3", "4"])
    gamma = {"1": ["c1", "c2"], "2": ["c1"], "3": ["c3"], "4": ["c3", "c4"]}
    return CoverageFunction(CoverageMap.build(ground, gamma))


@pytest.fixture
def truncated():
    """Factory for f(A) = min(|A|, k) over labels 1..n."""

    def make(n: int, k: int) -> TruncatedCardinality:
        return TruncatedCardinality(GroundSet.of([str(i) for i in range(1, n + 1)]), k)

    return make


@pytest.fixture
def unit_modular(triple) -> ModularFunction:
    return ModularFunction(triple, [Fraction(1)] * 3)


@pytest.fixture
def supermodular_table() -> TabulatedFunction:
    """f({0}) = f({1}) = 1, f({0,1}) = 3."""
    return TabulatedFunction(GroundSet.of(["0", "1"]), [Fraction(v) for v in (0, 1, 1, 3)])
