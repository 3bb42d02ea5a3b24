"""Tests for the submodular information measures."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subind.config import configure
from subind.errors import PreconditionError
from subind.models.functions import CoverageFunction, CoverageMap, TabulatedFunction
from subind.models.sets import GroundSet, Subset
from subind.services.measures import (
    conditional_independence,
    multiset_mutual_information,
    mutual_information,
    total_correlation,
)
from tests.strategies import coverage_functions, ground_of, modular_functions


def test_coverage_mutual_information_is_zero(coverage, triple):
    result = mutual_information(coverage, triple.parse("1,2"), triple.parse("3"))
    assert result.value == 0
    assert result.exact
    assert result.validated_submodular
    assert result.to_payload() == {
        "value": "0",
        "exactness": "exact",
        "validated_submodular": True,
    }


def test_mutual_information_with_empty_set(coverage, triple):
    assert mutual_information(coverage, triple.parse("1"), triple.empty()).value == 0


def test_truncated_union_value(truncated):
    f = truncated(6, 4)
    g = f.ground
    assert mutual_information(f, g.parse("1,2"), g.parse("3,4,5,6")).value == 2


def test_conditional_mutual_information(coverage, triple):
    # I(1; 2 | 3): f(1|3) + f(2|3) - f(1,2|3) = 2 + 1 - 2
    value = mutual_information(coverage, triple.parse("1"), triple.parse("2"), triple.parse("3"))
    assert value.value == 1


def test_unvalidated_function_is_flagged(supermodular_table, caplog):
    g = supermodular_table.ground
    with caplog.at_level("WARNING"):
        result = mutual_information(supermodular_table, g.parse("0"), g.parse("1"))
    assert result.value == -1
    assert not result.validated_submodular
    assert "not validated submodular" in caplog.text


def test_total_correlation(truncated):
    f = truncated(6, 4)
    g = f.ground
    sets = [g.parse("1,2"), g.parse("3,4"), g.parse("5,6")]
    assert total_correlation(f, sets).value == 2
    with pytest.raises(PreconditionError):
        total_correlation(f, [])


def test_multiset_repeated_set(coverage, triple):
    a = triple.parse("1")
    assert multiset_mutual_information(coverage, [a, a, a]).value == 2
    assert multiset_mutual_information(coverage, [a]).value == 2


def test_multiset_differs_from_total_correlation():
    ground = GroundSet.of(["a", "b", "c"])
    cov = CoverageMap.build(ground, {"a": ["c1", "c2"], "b": ["c2", "c3"], "c": ["c3", "c1"]})
    f = CoverageFunction(cov)
    sets = [ground.parse("a"), ground.parse("b"), ground.parse("c")]
    assert multiset_mutual_information(f, sets).value == 0
    assert total_correlation(f, sets).value == 3


def test_multiset_bounds(coverage, triple):
    with pytest.raises(PreconditionError):
        multiset_mutual_information(coverage, [])
    configure(multiset_cap=2)
    a = triple.parse("1")
    with pytest.raises(PreconditionError, match="1..2 sets"):
        multiset_mutual_information(coverage, [a, a, a])


def _all_subsets(ground: GroundSet) -> list[Subset]:
    return [Subset(ground, m) for m in range(1 << ground.n)]


@settings(max_examples=30, deadline=None)
@given(coverage_functions(max_n=4))
def test_nonnegative_symmetric_and_reducible(f):
    subsets = _all_subsets(f.ground)
    for a in subsets:
        for b in subsets:
            for c in (f.ground.empty(), f.ground.singleton(0)):
                ab = mutual_information(f, a, b, c).value
                assert ab >= 0
                assert ab == mutual_information(f, b, a, c).value
                g = f.condition_on(c)
                assert ab == mutual_information(g, a, b).value


@settings(max_examples=30, deadline=None)
@given(coverage_functions(max_n=4))
def test_monotone_in_one_argument(f):
    subsets = _all_subsets(f.ground)
    for a in subsets:
        for b in subsets:
            for extra in subsets:
                wider = b | extra
                assert (
                    mutual_information(f, a, b).value <= mutual_information(f, a, wider).value
                )


@settings(max_examples=40, deadline=None)
@given(st.one_of(coverage_functions(max_n=5), modular_functions(max_n=5)), st.data())
def test_two_set_multiset_is_mutual_information(f, data):
    n = f.ground.n
    a = Subset(f.ground, data.draw(st.integers(0, (1 << n) - 1)))
    b = Subset(f.ground, data.draw(st.integers(0, (1 << n) - 1)))
    assert multiset_mutual_information(f, [a, b]).value == mutual_information(f, a, b).value


def test_conditional_independence_characterizations(coverage, triple):
    a, b, c = triple.parse("1"), triple.parse("2"), triple.parse("3")
    report = conditional_independence(coverage, a, c, b)
    assert report.holds
    assert report.characterizations_agree
    assert report.sufficient_condition is None

    dependent = conditional_independence(coverage, a, b, c)
    assert not dependent.holds
    assert dependent.characterizations_agree

    assert conditional_independence(coverage, a, triple.empty(), b).sufficient_condition == (
        "C = ∅"
    )
    assert conditional_independence(coverage, a, c, a | b).sufficient_condition == "A ⊆ B"


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=7, max_size=7), st.data())
def test_characterizations_agree_on_any_table(values, data):
    f = TabulatedFunction(ground_of(3), [Fraction(0)] + [Fraction(v) for v in values])
    a, b, c = (Subset(f.ground, data.draw(st.integers(0, 7))) for _ in range(3))
    assert conditional_independence(f, a, c, b).characterizations_agree
