"""Tests for spec-file loading and writing."""

import json
from fractions import Fraction

import pytest

from subind.errors import SpecError, UnknownNameError
from subind.models.functions import (
    CoverageFunction,
    EntropyFunction,
    FacilityLocation,
    ModularFunction,
    TabulatedFunction,
    TruncatedCardinality,
)
from subind.services.specs import (
    dump_function,
    function_to_spec,
    load_distribution,
    load_function,
    load_pairs,
    parse_function,
)

COVERAGE_SPEC = {
    "family": "coverage",
    "ground": ["1", "2", "3"],
    "concepts": ["c1", "c2", "c3"],
    "gamma": {"1": ["c1", "c2"], "2": ["c1"], "3": ["c3"]},
    "weights": {"c1": 1, "c2": "1", "c3": "0.5"},
}


def _write(tmp_path, name, data) -> str:
    path = tmp_path / name
    path.write_text(data if isinstance(data, str) else json.dumps(data), encoding="utf-8")
    return str(path)


def test_load_coverage(tmp_path):
    f = load_function(_write(tmp_path, "cov.json", COVERAGE_SPEC))
    assert isinstance(f, CoverageFunction)
    assert f.exact
    assert f.evaluate(f.ground.parse("1,3")) == Fraction(5, 2)
    assert f.coverage.weights == (Fraction(1), Fraction(1), Fraction(1, 2))


def test_json_floats_make_a_floating_function():
    spec = {"family": "modular", "ground": ["a", "b"], "weights": {"a": 0.5, "b": 1}}
    f = parse_function(spec)
    assert isinstance(f, ModularFunction)
    assert not f.exact


def test_decimal_strings_are_exact():
    spec = {"family": "modular", "ground": ["a", "b"], "weights": {"a": "0.1", "b": "1/3"}}
    f = parse_function(spec)
    assert f.exact
    assert f.evaluate(f.ground.full()) == Fraction(1, 10) + Fraction(1, 3)


def test_malformed_json_reports_line_and_column(tmp_path):
    path = _write(tmp_path, "bad.json", '{\n  "family": "modular",\n  "ground": [,]\n}')
    with pytest.raises(SpecError) as info:
        load_function(path)
    assert info.value.location is not None
    assert info.value.location.startswith(f"{path}:3:")


def test_missing_file(tmp_path):
    with pytest.raises(SpecError, match="cannot read"):
        load_function(tmp_path / "absent.json")


def test_schema_errors_name_the_field():
    with pytest.raises(SpecError) as info:
        parse_function({"family": "truncated_cardinality", "ground": ["a"]}, "spec.json")
    assert info.value.location == "spec.json:truncated_cardinality.k"

    with pytest.raises(SpecError):
        parse_function({"family": "matroid", "ground": ["a"]})
    with pytest.raises(SpecError):
        parse_function({**COVERAGE_SPEC, "colour": "red"})


def test_bad_values_are_spec_errors():
    with pytest.raises(SpecError, match="weights.b"):
        parse_function({"family": "modular", "ground": ["a", "b"], "weights": {"a": 1, "b": "x"}})
    with pytest.raises(SpecError, match="no weight for b"):
        parse_function({"family": "modular", "ground": ["a", "b"], "weights": {"a": 1}})
    with pytest.raises(SpecError, match="duplicate"):
        parse_function({"family": "truncated_cardinality", "ground": ["a", "a"], "k": 1})
    with pytest.raises(SpecError, match="nonnegative"):
        parse_function({**COVERAGE_SPEC, "weights": {"c1": -1}})


def test_unknown_labels():
    with pytest.raises(UnknownNameError):
        parse_function({"family": "modular", "ground": ["a"], "weights": {"a": 1, "z": 2}})


def test_tabulated_needs_every_subset():
    spec = {"family": "tabulated", "ground": ["0", "1"], "values": {"": 0, "0": 1, "1": 1}}
    with pytest.raises(SpecError, match="1 subset"):
        parse_function(spec)


def test_tabulated_rejects_duplicate_keys():
    spec = {
        "family": "tabulated",
        "ground": ["0", "1"],
        "values": {"": 0, "0": 1, "1": 1, "0,1": 2, "1,0": 2},
    }
    with pytest.raises(SpecError, match="twice"):
        parse_function(spec)


def test_tabulated_load():
    values = {"": 0, "0": 1, "1": 1, "0,1": 3}
    spec = {"family": "tabulated", "ground": ["0", "1"], "values": values}
    f = parse_function(spec)
    assert isinstance(f, TabulatedFunction)
    assert f.values == (0, 1, 1, 3)
    assert not f.validated_submodular


def test_entropy_spec_builtin_and_inline():
    f = parse_function({"family": "entropy", "distribution": "D3"})
    assert isinstance(f, EntropyFunction)
    assert f.ground.labels == ("X1", "X2", "X3")

    inline = {
        "family": "entropy",
        "ground": ["U", "V"],
        "distribution": {
            "variables": ["U", "V"],
            "arities": [2, 2],
            "pmf": [{"x": [0, 0], "p": "1/2"}, {"x": [1, 1], "p": "1/2"}],
        },
    }
    g = parse_function(inline)
    assert g.evaluate(g.ground.parse("U,V")) == pytest.approx(1.0)

    with pytest.raises(SpecError, match="does not match"):
        parse_function({**inline, "ground": ["V", "U"]})
    with pytest.raises(UnknownNameError):
        parse_function({"family": "entropy", "distribution": "D9"})


def test_load_distribution(tmp_path):
    assert load_distribution("D2").variables.n == 4
    spec = {
        "variables": ["A", "B"],
        "arities": [2, 3],
        "pmf": [{"x": [0, 2], "p": 0.25}, {"x": [1, 0], "p": 0.75}],
    }
    dist = load_distribution(_write(tmp_path, "d.json", spec))
    assert not dist.exact
    assert dist.arities == (2, 3)


def test_distribution_errors(tmp_path):
    bad_sum = {"variables": ["A"], "arities": [2], "pmf": [{"x": [0], "p": "1/2"}]}
    with pytest.raises(SpecError, match="sum to 1/2"):
        load_distribution(_write(tmp_path, "sum.json", bad_sum))
    out_of_range = {"variables": ["A"], "arities": [2], "pmf": [{"x": [2], "p": 1}]}
    with pytest.raises(SpecError, match="arities"):
        load_distribution(_write(tmp_path, "range.json", out_of_range))
    twice = {
        "variables": ["A"],
        "arities": [2],
        "pmf": [{"x": [0], "p": "1/2"}, {"x": [0], "p": "1/2"}],
    }
    with pytest.raises(SpecError, match="pmf.1.x"):
        load_distribution(_write(tmp_path, "twice.json", twice))


def test_load_pairs(tmp_path, triple):
    path = _write(tmp_path, "pairs.json", [{"A": "1,2", "B": "3"}, {"A": "", "B": "1"}])
    pairs = load_pairs(path, triple)
    assert pairs == [
        (triple.parse("1,2"), triple.parse("3")),
        (triple.empty(), triple.parse("1")),
    ]
    with pytest.raises(SpecError):
        load_pairs(_write(tmp_path, "bad.json", [{"A": "1"}]), triple)


@pytest.mark.parametrize(
    "spec",
    [
        COVERAGE_SPEC,
        {"family": "modular", "ground": ["a", "b"], "weights": {"a": "2/3", "b": 0.5}},
        {"family": "truncated_cardinality", "ground": ["a", "b", "c"], "k": 2},
        {"family": "facility_location", "ground": ["a", "b"], "similarity": [[1, 0], [0, 1]]},
        {"family": "tabulated", "ground": ["x"], "values": {"": 0, "x": "5/2"}},
        {"family": "entropy", "distribution": "D1"},
    ],
    ids=lambda spec: spec["family"],
)
def test_written_spec_loads_back_equal(tmp_path, spec):
    f = parse_function(spec)
    path = tmp_path / "out.json"
    dump_function(f, path)
    g = load_function(path)
    assert type(g) is type(f)
    assert g.ground == f.ground
    assert function_to_spec(g) == function_to_spec(f)
    for mask in range(1 << f.ground.n):
        assert g.value_of(mask) == f.value_of(mask)


def test_families_build_expected_types():
    assert isinstance(
        parse_function({"family": "truncated_cardinality", "ground": ["a"], "k": 1}),
        TruncatedCardinality,
    )
    f = parse_function(
        {"family": "facility_location", "ground": ["a", "b"], "similarity": [[2, 1], [1, 3]]}
    )
    assert isinstance(f, FacilityLocation)
    assert f.evaluate(f.ground.parse("a,b")) == 5
