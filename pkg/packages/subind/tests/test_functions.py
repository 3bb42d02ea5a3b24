"""Tests for the set-function families."""

from fractions import Fraction

import pytest

from subind.errors import GroundMismatchError
from subind.models.functions import (
    ConditionedFunction,
    CoverageFunction,
    CoverageMap,
    FacilityLocation,
    Family,
    ModularFunction,
    TabulatedFunction,
    TruncatedCardinality,
)
from subind.models.sets import GroundSet
from subind.services.entropy import builtin_distribution, make_entropy_function


def test_coverage_values(coverage, triple):
    assert coverage.evaluate(triple.parse("1")) == 2
    assert coverage.evaluate(triple.parse("2")) == 1
    assert coverage.evaluate(triple.parse("1,2")) == 2
    assert coverage.evaluate(triple.full()) == 3
    assert coverage.evaluate(triple.empty()) == 0
    assert coverage.exact
    assert isinstance(coverage.evaluate(triple.full()), Fraction)


def test_coverage_weights_and_image(triple):
    cov = CoverageMap.build(
        triple,
        {"1": ["c1", "c2"], "2": ["c1"], "3": ["c3"]},
        weights={"c1": Fraction(1, 2), "c3": Fraction(5)},
    )
    f = CoverageFunction(cov)
    assert f.evaluate(triple.parse("1")) == Fraction(3, 2)
    assert f.evaluate(triple.full()) == Fraction(13, 2)
    assert cov.image(triple.parse("2,3")).text() == "c1,c3"


def test_coverage_float_weights_are_floating(triple):
    cov = CoverageMap.build(triple, {"1": ["c1"]}, weights={"c1": 0.5})
    f = CoverageFunction(cov)
    assert not f.exact
    assert f.evaluate(triple.parse("1")) == 0.5


def test_coverage_negative_weight_rejected(triple):
    with pytest.raises(ValueError, match="nonnegative"):
        CoverageMap.build(triple, {"1": ["c1"]}, weights={"c1": Fraction(-1)})


def test_truncated_cardinality(truncated):
    f = truncated(6, 4)
    assert f.evaluate(f.ground.parse("1,2,3")) == 3
    assert f.evaluate(f.ground.full()) == 4
    with pytest.raises(ValueError):
        TruncatedCardinality(f.ground, 0)


def test_modular(triple):
    f = ModularFunction(triple, [Fraction(2), Fraction(0), Fraction(1, 3)])
    assert f.evaluate(triple.full()) == Fraction(7, 3)
    with pytest.raises(ValueError):
        ModularFunction(triple, [Fraction(1)])


def test_facility_location_exact_and_floating(triple):
    sim = [[Fraction(3), Fraction(1), Fraction(0)],
           [Fraction(1), Fraction(3), Fraction(1)],
           [Fraction(0), Fraction(1), Fraction(3)]]
    f = FacilityLocation(triple, sim)
    assert f.exact
    assert f.evaluate(triple.empty()) == 0
    assert f.evaluate(triple.parse("2")) == 5
    assert f.evaluate(triple.parse("1,3")) == 7

    g = FacilityLocation(triple, [[float(v) for v in row] for row in sim])
    assert not g.exact
    assert g.evaluate(triple.parse("1,3")) == pytest.approx(7.0)


def test_tabulated_requires_normalization():
    with pytest.raises(ValueError, match="f\\(∅\\) = 0"):
        TabulatedFunction(GroundSet.of(["a"]), [Fraction(1), Fraction(2)])
    with pytest.raises(ValueError, match="expected 4 values"):
        TabulatedFunction(GroundSet.of(["a", "b"]), [Fraction(0)])


def test_tabulated_validation_flag(supermodular_table, coverage):
    assert not supermodular_table.validated_submodular
    table = TabulatedFunction(
        coverage.ground, [coverage.value_of(m) for m in range(8)]
    )
    assert table.validated_submodular


def test_conditioned_function(coverage, triple):
    g = coverage.condition_on(triple.parse("1"))
    assert isinstance(g, ConditionedFunction)
    assert g.family is Family.CONDITIONED
    assert g.evaluate(triple.parse("2")) == 0
    assert g.evaluate(triple.parse("3")) == 1
    assert g.exact and g.validated_submodular
    assert coverage.condition_on(triple.empty()) is coverage


def test_conditional_gain(coverage, triple):
    assert coverage.conditional_gain(triple.parse("2"), triple.parse("1")) == 0
    assert coverage.conditional_gain(triple.parse("1,3"), triple.parse("2")) == 2


def test_ground_mismatch(coverage):
    with pytest.raises(GroundMismatchError):
        coverage.evaluate(GroundSet.of(["x"]).parse("x"))


def test_entropy_function_values():
    f = make_entropy_function(builtin_distribution("D3"))
    ground = f.ground
    assert not f.exact
    assert f.evaluate(ground.parse("X1")) == pytest.approx(1.0)
    assert f.evaluate(ground.parse("X1,X2")) == pytest.approx(2.0)
    assert f.evaluate(ground.full()) == pytest.approx(2.0)
    assert f.evaluate(ground.empty()) == 0.0


def test_memoization_returns_same_value(coverage):
    first = coverage.value_of(0b111)
    assert coverage.value_of(0b111) is first


def test_entropy_comparisons_are_absolute(coverage, triple):
    f = make_entropy_function(builtin_distribution("D2"))
    assert f.absolute_tolerance
    assert f.condition_on(f.ground.parse("X1")).absolute_tolerance
    assert not coverage.absolute_tolerance
    assert not coverage.condition_on(triple.parse("1")).absolute_tolerance
