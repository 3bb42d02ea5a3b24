"""Tests for exhaustive lattice verification."""

import random
from fractions import Fraction

import pytest

from subind.config import configure
from subind.errors import InvariantViolationError
from subind.models.functions import (
    CoverageFunction,
    CoverageMap,
    ModularFunction,
    TabulatedFunction,
    TruncatedCardinality,
)
from subind.models.reports import IndependenceType as T
from subind.services.enumeration import disjoint_pairs
from subind.services.lattice import classify_pairs, verify_lattice
from tests.strategies import ground_of

LATTICE_BREAKER = [0, 1, 1, 3, 1, 2, 2, 3]


class _ClaimsSubmodular(TabulatedFunction):
    @property
    def validated_submodular(self) -> bool:
        return True


def _random_coverage(seed: int, n: int) -> CoverageFunction:
    rng = random.Random(seed)
    concepts = [f"c{i}" for i in range(5)]
    ground = ground_of(n)
    gamma = {label: rng.sample(concepts, rng.randint(0, 3)) for label in ground.labels}
    weights = {c: Fraction(rng.randint(0, 3)) for c in concepts}
    return CoverageFunction(CoverageMap.build(ground, gamma, concepts, weights))


def _sweep_functions():
    yield "truncated k=2", TruncatedCardinality(ground_of(6), 2)
    yield "truncated k=3", TruncatedCardinality(ground_of(6), 3)
    for seed in range(3):
        yield f"coverage seed={seed}", _random_coverage(seed, 6)
    rng = random.Random(11)
    yield "modular", ModularFunction(ground_of(6), [Fraction(rng.randint(0, 4)) for _ in range(6)])


@pytest.mark.parametrize("name,f", list(_sweep_functions()))
def test_lattice_soundness_sweep(name, f):
    report = verify_lattice(f)
    assert report.ok, name
    assert report.pairs_checked == 3**6
    assert report.validated_submodular


def test_modular_counts_everything(unit_modular):
    report = verify_lattice(unit_modular)
    assert report.type_counts == {t: 27 for t in T}


def test_explicit_pairs(coverage, triple):
    pairs = [(triple.parse("1,2"), triple.parse("3")), (triple.parse("1"), triple.parse("2"))]
    report = verify_lattice(coverage, pairs)
    assert report.pairs_checked == 2
    assert report.type_counts[T.JI] == 1
    assert report.to_payload()["holds_counts"]["ModI"] == 0


def test_bad_pairs_keyword(coverage):
    with pytest.raises(ValueError):
        verify_lattice(coverage, "some")


def test_violations_returned_for_unvalidated_function():
    f = TabulatedFunction(ground_of(3), [Fraction(v) for v in LATTICE_BREAKER])
    report = verify_lattice(f)
    assert not report.ok
    assert not report.validated_submodular
    assert any(
        (v.premise, v.conclusion) == (T.JI, T.MI) and v.a.text() == "e0" and v.b.text() == "e1,e2"
        for v in report.violations
    )


def test_violations_raise_for_validated_function():
    f = _ClaimsSubmodular(ground_of(3), [Fraction(v) for v in LATTICE_BREAKER])
    with pytest.raises(InvariantViolationError, match="lattice violation"):
        verify_lattice(f)


def test_worker_fan_out_preserves_order():
    f = _random_coverage(5, 5)
    pairs = list(disjoint_pairs(f.ground))
    serial = [r.to_payload() for r in classify_pairs(f, pairs)]
    configure(workers=2)
    parallel = [r.to_payload() for r in classify_pairs(f, pairs)]
    assert parallel == serial
