"""Attribute universes and bitmask-backed attribute sets.

A universe fixes the finite attribute set M together with a total order
(declaration order; index 0 is the <-smallest attribute). All set values
carry their universe so that set algebra, lectic comparison and closure
operators can be checked for compatibility and run on plain ints.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import InputError, UniverseMismatchError


@dataclass(frozen=True)
class AttributeUniverse:
    """The ordered, finite attribute set M."""

    attributes: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        if any(not name for name in self.attributes):
            raise InputError("attribute names must be non-empty")
        index = {name: i for i, name in enumerate(self.attributes)}
        if len(index) != len(self.attributes):
            raise InputError("attribute names must be distinct")
        object.__setattr__(self, "_index", index)

    @classmethod
    def of(cls, names: Iterable[str]) -> "AttributeUniverse":
        return cls(tuple(names))

    def __len__(self) -> int:
        return len(self.attributes)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise InputError(f"unknown attribute {name!r}") from None

    @property
    def full_mask(self) -> int:
        return (1 << len(self.attributes)) - 1

    def empty(self) -> "AttributeSet":
        return AttributeSet(self, 0)

    def full(self) -> "AttributeSet":
        return AttributeSet(self, self.full_mask)

    def subset(self, names: Iterable[str]) -> "AttributeSet":
        bits = 0
        for name in names:
            bits |= 1 << self.index(name)
        return AttributeSet(self, bits)

    def from_bits(self, bits: int) -> "AttributeSet":
        return AttributeSet(self, bits)

    def singleton(self, name: str) -> "AttributeSet":
        return AttributeSet(self, 1 << self.index(name))

    def subsets(self) -> Iterator["AttributeSet"]:
        """All subsets of M, in increasing bitmask order."""
        for bits in range(1 << len(self.attributes)):
            yield AttributeSet(self, bits)


@dataclass(frozen=True)
class AttributeSet:
    """A subset of one universe, stored as a bitmask (bit i = attribute i)."""

    universe: AttributeUniverse
    bits: int

    def __post_init__(self) -> None:
        if self.bits & ~self.universe.full_mask:
            raise InputError("bitmask contains attributes outside the universe")

    def _check(self, other: "AttributeSet") -> None:
        if self.universe != other.universe:
            raise UniverseMismatchError("attribute sets come from different universes")

    def __or__(self, other: "AttributeSet") -> "AttributeSet":
        self._check(other)
        return AttributeSet(self.universe, self.bits | other.bits)

    def __and__(self, other: "AttributeSet") -> "AttributeSet":
        self._check(other)
        return AttributeSet(self.universe, self.bits & other.bits)

    def __sub__(self, other: "AttributeSet") -> "AttributeSet":
        self._check(other)
        return AttributeSet(self.universe, self.bits & ~other.bits)

    def __xor__(self, other: "AttributeSet") -> "AttributeSet":
        self._check(other)
        return AttributeSet(self.universe, self.bits ^ other.bits)

    def __le__(self, other: "AttributeSet") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __lt__(self, other: "AttributeSet") -> bool:
        return self <= other and self.bits != other.bits

    def __contains__(self, name: str) -> bool:
        return bool(self.bits >> self.universe.index(name) & 1)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __repr__(self) -> str:
        return "{%s}" % ", ".join(self.names)

    @property
    def names(self) -> tuple[str, ...]:
        attrs = self.universe.attributes
        return tuple(attrs[i] for i in self.indices())

    def indices(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def complement(self) -> "AttributeSet":
        return AttributeSet(self.universe, self.universe.full_mask & ~self.bits)

    def add(self, name: str) -> "AttributeSet":
        return AttributeSet(self.universe, self.bits | 1 << self.universe.index(name))

    def isdisjoint(self, other: "AttributeSet") -> bool:
        self._check(other)
        return self.bits & other.bits == 0

    def min_index(self) -> int:
        """Index of the <-smallest member; undefined on the empty set."""
        if not self.bits:
            raise InputError("empty set has no smallest member")
        return (self.bits & -self.bits).bit_length() - 1
