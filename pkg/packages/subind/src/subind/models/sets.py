"""Ground sets and subsets represented as bitmasks over element indices."""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

from subind.errors import GroundMismatchError, UnknownNameError


@dataclass(frozen=True)
class GroundSet:
    """An ordered universe of distinct labels; element ``i`` is ``labels[i]``."""

    labels: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        index: dict[str, int] = {}
        for i, label in enumerate(labels):
            if not label or any(c in label for c in ",;=") or label != label.strip():
                raise ValueError(f"invalid element label {label!r}")
            if label in index:
                raise ValueError(f"duplicate element label {label!r}")
            index[label] = i
        object.__setattr__(self, "_index", index)

    @classmethod
    def of(cls, labels: Iterable[str]) -> "GroundSet":
        return cls(tuple(labels))

    @property
    def n(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownNameError(
                f"unknown element {label!r}; ground set is {{{','.join(self.labels)}}}"
            ) from None

    def label(self, i: int) -> str:
        return self.labels[i]

    def empty(self) -> "Subset":
        return Subset(self, 0)

    def full(self) -> "Subset":
        return Subset(self, (1 << self.n) - 1)

    def singleton(self, i: int) -> "Subset":
        return Subset(self, 1 << i)

    def from_indices(self, indices: Iterable[int]) -> "Subset":
        mask = 0
        for i in indices:
            mask |= 1 << i
        return Subset(self, mask)

    def subset(self, labels: Iterable[str]) -> "Subset":
        mask = 0
        for label in labels:
            mask |= 1 << self.index(label)
        return Subset(self, mask)

    def parse(self, text: str) -> "Subset":
        """Parse a comma-separated label list such as ``"a1,a2"``; empty text is ∅."""
        return self.subset(part.strip() for part in text.split(",") if part.strip())


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Subset:
    """A subset of a ground set; bit ``i`` of ``mask`` marks element ``i``."""

    ground: GroundSet
    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.ground.n:
            raise ValueError(f"mask {self.mask:#x} has members outside 0..{self.ground.n - 1}")

    def _check(self, other: "Subset") -> None:
        if other.ground is not self.ground and other.ground != self.ground:
            raise GroundMismatchError("subsets belong to different ground sets")

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, index: object) -> bool:
        return isinstance(index, int) and 0 <= index and bool(self.mask >> index & 1)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.ground.labels[i] for i in iter_bits(self.mask))

    def union(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(self.ground, self.mask | other.mask)

    def intersection(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(self.ground, self.mask & other.mask)

    def difference(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(self.ground, self.mask & ~other.mask)

    def complement(self) -> "Subset":
        return Subset(self.ground, ((1 << self.ground.n) - 1) & ~self.mask)

    def issubset(self, other: "Subset") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def isdisjoint(self, other: "Subset") -> bool:
        self._check(other)
        return self.mask & other.mask == 0

    def add(self, index: int) -> "Subset":
        return Subset(self.ground, self.mask | 1 << index)

    __or__ = union
    __and__ = intersection
    __sub__ = difference
    __le__ = issubset

    def __invert__(self) -> "Subset":
        return self.complement()

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Enumeration order: cardinality, then lexicographic on indices."""
        return len(self), self.indices

    def text(self) -> str:
        """Comma-joined labels, the file/CLI form."""
        return ",".join(self.labels)

    def __str__(self) -> str:
        return "{" + self.text() + "}"
