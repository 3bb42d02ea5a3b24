"""File schemas for set-function specs, distributions and pair lists."""

from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field, StrictFloat, StrictInt, StrictStr

# integers and fraction/decimal strings are exact; JSON floats are floating
Number = StrictInt | StrictFloat | StrictStr


class _Spec(BaseModel):
    model_config = ConfigDict(extra="forbid")


class PmfEntry(_Spec):
    x: list[int]
    p: Number


class DistributionSpec(_Spec):
    """A joint PMF; assignments not listed have probability zero."""

    variables: list[str] = Field(min_length=1)
    arities: list[Annotated[int, Field(ge=1)]]
    pmf: list[PmfEntry] = Field(min_length=1)


class _FunctionSpec(_Spec):
    ground: list[str]


class ModularSpec(_FunctionSpec):
    family: Literal["modular"]
    weights: dict[str, Number]


class CoverageSpec(_FunctionSpec):
    family: Literal["coverage"]
    concepts: list[str] | None = None
    gamma: dict[str, list[str]]
    weights: dict[str, Number] = Field(default_factory=dict)


class TruncatedCardinalitySpec(_FunctionSpec):
    family: Literal["truncated_cardinality"]
    k: int = Field(ge=1)


class FacilityLocationSpec(_FunctionSpec):
    family: Literal["facility_location"]
    similarity: list[list[Number]]


class TabulatedSpec(_FunctionSpec):
    """``values`` is keyed by comma-joined labels; "" is the empty set."""

    family: Literal["tabulated"]
    values: dict[str, Number]


class EntropySpec(_Spec):
    """Entropy of a built-in (D1, D2, D3) or inline distribution."""

    family: Literal["entropy"]
    ground: list[str] | None = None
    distribution: str | DistributionSpec


FunctionSpec = Annotated[
    ModularSpec
    | CoverageSpec
    | TruncatedCardinalitySpec
    | FacilityLocationSpec
    | TabulatedSpec
    | EntropySpec,
    Field(discriminator="family"),
]


class PairSpec(_Spec):
    a: str = Field(alias="A")
    b: str = Field(alias="B")
