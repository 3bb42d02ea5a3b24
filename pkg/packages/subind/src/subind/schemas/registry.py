"""Schema for the embedded counterexample registry (one YAML file per entry)."""

from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field

from subind.models.reports import IndependenceType, MultisetMode
from subind.schemas.specs import FunctionSpec, Number

VerdictText = Literal["holds", "fails"]


class _Model(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)


class EntryMetadata(_Model):
    name: str
    claim: str
    description: str = ""
    tags: list[str] = Field(default_factory=list)


class Quantity(_Model):
    """A scalar computed from the entry's function.

    ``value`` is f(A), ``gain`` is f(A | C), ``mutual_information`` is I_f(A; B | C);
    the two multi-set measures read ``sets``.
    """

    measure: Literal[
        "value",
        "gain",
        "mutual_information",
        "total_correlation",
        "multiset_mutual_information",
    ]
    a: str | None = Field(default=None, alias="A")
    b: str | None = Field(default=None, alias="B")
    c: str | None = Field(default=None, alias="C")
    sets: list[str] | None = None


class ClassifyCheck(_Model):
    kind: Literal["classify"]
    a: str = Field(alias="A")
    b: str = Field(alias="B")
    given: str | None = None
    expect: dict[IndependenceType, VerdictText]


class WitnessCheck(_Model):
    """The failing equality reported for ``type``: f(target | given) vs f(target)."""

    kind: Literal["witness"]
    a: str = Field(alias="A")
    b: str = Field(alias="B")
    type: IndependenceType
    target: str
    given: str
    observed: Number | None = None
    expected: Number | None = None


class ValueCheck(Quantity):
    kind: Literal["value"]
    expected: Number


class CompareCheck(_Model):
    kind: Literal["compare"]
    left: Quantity
    right: Quantity
    relation: Literal["equal", "differ"]


class MultisetCheck(_Model):
    kind: Literal["multiset"]
    sets: list[str] = Field(min_length=1)
    mode: MultisetMode
    expect: VerdictText
    total_correlation: Number | None = None


class UnionCheck(_Model):
    kind: Literal["union"]
    a: str = Field(alias="A")
    b: str = Field(alias="B")
    c: str = Field(alias="C")
    ab: Number
    ac: Number
    a_bc: Number


class FactorizationCheck(_Model):
    kind: Literal["factorization"]
    a: str = Field(alias="A")
    b: str = Field(alias="B")
    independent: bool


class MarkovCheck(_Model):
    kind: Literal["markov"]
    a: str = Field(alias="A")
    b: str = Field(alias="B")
    b_u: str = Field(alias="B_U")
    preimage: str
    measure: Number
    holds: bool


class ValidationWitness(_Model):
    j: str
    s: str = Field(alias="S")
    t: str | None = Field(default=None, alias="T")


class ValidationCheck(_Model):
    kind: Literal["validation"]
    submodular: bool
    monotone: bool = True
    normalized: bool = True
    witness: ValidationWitness | None = None


Check = Annotated[
    ClassifyCheck
    | WitnessCheck
    | ValueCheck
    | CompareCheck
    | MultisetCheck
    | UnionCheck
    | FactorizationCheck
    | MarkovCheck
    | ValidationCheck,
    Field(discriminator="kind"),
]


class RegistryEntry(_Model):
    id: str = Field(pattern=r"^SUB-\d{4}$")
    version: str = "1.0.0"
    metadata: EntryMetadata
    function: FunctionSpec
    checks: list[Check] = Field(min_length=1)
