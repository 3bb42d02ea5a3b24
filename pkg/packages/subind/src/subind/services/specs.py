"""Loading set functions and distributions from spec files, and writing them back."""

import json
import logging
from collections.abc import Mapping
from pathlib import Path
from typing import Any

from pydantic import TypeAdapter, ValidationError

from subind.errors import SpecError
from subind.models.distribution import JointDistribution
from subind.models.functions import (
    CoverageFunction,
    CoverageMap,
    EntropyFunction,
    FacilityLocation,
    ModularFunction,
    SetFunction,
    TabulatedFunction,
    TruncatedCardinality,
)
from subind.models.sets import GroundSet, Subset
from subind.models.values import Value, json_value, parse_number
from subind.schemas.specs import (
    CoverageSpec,
    DistributionSpec,
    EntropySpec,
    FacilityLocationSpec,
    FunctionSpec,
    ModularSpec,
    PairSpec,
    TabulatedSpec,
    TruncatedCardinalitySpec,
)
from subind.services.entropy import (
    BUILTIN_DISTRIBUTIONS,
    builtin_distribution,
    make_entropy_function,
)

logger = logging.getLogger(__name__)

_function_adapter: TypeAdapter[Any] = TypeAdapter(FunctionSpec)
_pairs_adapter = TypeAdapter(list[PairSpec])


def _read_json(path: Path) -> Any:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise SpecError(f"cannot read file: {exc.strerror}", str(path)) from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(exc.msg, f"{path}:{exc.lineno}:{exc.colno}") from exc


def _validate(adapter: TypeAdapter[Any], data: Any, where: str) -> Any:
    try:
        return adapter.validate_python(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        field = ".".join(str(part) for part in first["loc"])
        location = f"{where}:{field}" if field else where
        raise SpecError(first["msg"], location) from exc


def _number(raw: int | float | str, where: str) -> Value:
    try:
        return parse_number(raw)
    except ValueError as exc:
        raise SpecError(str(exc), where) from exc


def _ground(labels: list[str], where: str) -> GroundSet:
    try:
        return GroundSet.of(labels)
    except ValueError as exc:
        raise SpecError(str(exc), f"{where}:ground") from exc


def build_distribution(
    spec: DistributionSpec, where: str = "<distribution>"
) -> JointDistribution:
    variables = _ground(spec.variables, where)
    pmf: dict[tuple[int, ...], Value] = {}
    for i, entry in enumerate(spec.pmf):
        x = tuple(entry.x)
        if x in pmf:
            raise SpecError(f"assignment {entry.x} listed twice", f"{where}:pmf.{i}.x")
        pmf[x] = _number(entry.p, f"{where}:pmf.{i}.p")
    try:
        return JointDistribution(variables, tuple(spec.arities), pmf)
    except ValueError as exc:
        raise SpecError(str(exc), where) from exc


def resolve_distribution(source: str | DistributionSpec, where: str) -> JointDistribution:
    """A built-in name (D1, D2, D3) or an inline spec."""
    if isinstance(source, str):
        return builtin_distribution(source)
    return build_distribution(source, where)


def load_distribution(source: str | Path) -> JointDistribution:
    """Read a distribution file, or return the built-in one named ``source``."""
    if isinstance(source, str) and source in BUILTIN_DISTRIBUTIONS:
        return builtin_distribution(source)
    path = Path(source)
    spec = _validate(TypeAdapter(DistributionSpec), _read_json(path), str(path))
    return build_distribution(spec, str(path))


def _tabulated_values(ground: GroundSet, values: Mapping[str, Any], where: str) -> list[Value]:
    table: list[Value | None] = [None] * (1 << ground.n)
    for key, raw in values.items():
        mask = ground.parse(key).mask
        if table[mask] is not None:
            raise SpecError(f"subset {{{key}}} listed twice", f"{where}:values")
        table[mask] = _number(raw, f"{where}:values.{key}")
    missing = [Subset(ground, m) for m, v in enumerate(table) if v is None]
    if missing:
        raise SpecError(
            f"{len(missing)} subset(s) have no value, first {missing[0]}", f"{where}:values"
        )
    return [v for v in table if v is not None]


def build_function(spec: Any, where: str = "<spec>") -> SetFunction:
    """Construct the set function described by a validated spec model."""
    try:
        if isinstance(spec, EntropySpec):
            dist = resolve_distribution(spec.distribution, f"{where}:distribution")
            if spec.ground is not None and tuple(spec.ground) != dist.variables.labels:
                raise SpecError(
                    f"ground {spec.ground} does not match the distribution's variables "
                    f"{list(dist.variables.labels)}",
                    f"{where}:ground",
                )
            return make_entropy_function(dist)

        ground = _ground(spec.ground, where)
        if isinstance(spec, ModularSpec):
            for label in spec.weights:
                ground.index(label)
            missing = [label for label in ground.labels if label not in spec.weights]
            if missing:
                raise SpecError(f"no weight for {', '.join(missing)}", f"{where}:weights")
            return ModularFunction(
                ground,
                [_number(spec.weights[lbl], f"{where}:weights.{lbl}") for lbl in ground.labels],
            )
        if isinstance(spec, CoverageSpec):
            weights = {c: _number(w, f"{where}:weights.{c}") for c, w in spec.weights.items()}
            return CoverageFunction(CoverageMap.build(ground, spec.gamma, spec.concepts, weights))
        if isinstance(spec, TruncatedCardinalitySpec):
            return TruncatedCardinality(ground, spec.k)
        if isinstance(spec, FacilityLocationSpec):
            rows = [
                [_number(v, f"{where}:similarity.{i}.{j}") for j, v in enumerate(row)]
                for i, row in enumerate(spec.similarity)
            ]
            return FacilityLocation(ground, rows)
        if isinstance(spec, TabulatedSpec):
            return TabulatedFunction(ground, _tabulated_values(ground, spec.values, where))
    except ValueError as exc:
        raise SpecError(str(exc), where) from exc
    raise SpecError(f"unsupported spec {type(spec).__name__}", where)


def parse_function(data: Any, where: str = "<spec>") -> SetFunction:
    """Validate a spec mapping (decoded JSON or YAML) and build its function."""
    return build_function(_validate(_function_adapter, data, where), where)


def load_function(path: str | Path) -> SetFunction:
    path = Path(path)
    logger.debug("Loading function spec %s", path)
    return parse_function(_read_json(path), str(path))


def load_pairs(path: str | Path, ground: GroundSet) -> list[tuple[Subset, Subset]]:
    """Read a JSON list of {"A": "a,b", "B": "c"} pairs."""
    path = Path(path)
    entries = _validate(_pairs_adapter, _read_json(path), str(path))
    return [(ground.parse(e.a), ground.parse(e.b)) for e in entries]


def distribution_to_spec(dist: JointDistribution) -> dict[str, Any]:
    return {
        "variables": list(dist.variables.labels),
        "arities": list(dist.arities),
        "pmf": [{"x": list(x), "p": json_value(p)} for x, p in dist.support().items()],
    }


def function_to_spec(f: SetFunction) -> dict[str, Any]:
    """The JSON spec that ``parse_function`` turns back into an equal function."""
    ground = list(f.ground.labels)
    if isinstance(f, ModularFunction):
        weights = {lbl: json_value(w) for lbl, w in zip(ground, f.weights)}
        return {"family": "modular", "ground": ground, "weights": weights}
    if isinstance(f, CoverageFunction):
        cov = f.coverage
        return {
            "family": "coverage",
            "ground": ground,
            "concepts": list(cov.universe.labels),
            "gamma": {lbl: list(image.labels) for lbl, image in zip(ground, cov.gamma)},
            "weights": {c: json_value(w) for c, w in zip(cov.universe.labels, cov.weights)},
        }
    if isinstance(f, TruncatedCardinality):
        return {"family": "truncated_cardinality", "ground": ground, "k": f.k}
    if isinstance(f, FacilityLocation):
        similarity = [[json_value(v) for v in row] for row in f.similarity.tolist()]
        return {"family": "facility_location", "ground": ground, "similarity": similarity}
    if isinstance(f, TabulatedFunction):
        values = {
            Subset(f.ground, mask).text(): json_value(v) for mask, v in enumerate(f.values)
        }
        return {"family": "tabulated", "ground": ground, "values": values}
    if isinstance(f, EntropyFunction):
        return {
            "family": "entropy",
            "ground": ground,
            "distribution": distribution_to_spec(f.distribution),
        }
    raise SpecError(f"{f.family} functions have no file form")


def dump_function(f: SetFunction, path: str | Path) -> None:
    Path(path).write_text(json.dumps(function_to_spec(f), indent=2) + "\n", encoding="utf-8")
