"""Formal contexts and their derivation operators."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable

from .errors import InputError, UniverseMismatchError
from .universe import AttributeSet, AttributeUniverse

if TYPE_CHECKING:
    from .implications import Implication


@dataclass(frozen=True)
class FormalContext:
    """Objects, attributes and an incidence relation.

    ``rows[k]`` is the bitmask of attributes held by ``objects[k]``. The
    value is immutable; adding an object returns a new context. An empty
    object set is legal (then every intent closure is all of M).
    """

    objects: tuple[str, ...]
    universe: AttributeUniverse
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(set(self.objects)) != len(self.objects):
            raise InputError("object names must be distinct")
        if len(self.rows) != len(self.objects):
            raise InputError("one incidence row per object required")
        full = self.universe.full_mask
        if any(row & ~full for row in self.rows):
            raise InputError("incidence row references attributes outside the universe")

    @classmethod
    def build(
        cls,
        universe: AttributeUniverse,
        objects: Iterable[tuple[str, Iterable[str]]],
    ) -> "FormalContext":
        """Construct from ``(object name, attribute names)`` pairs."""
        names = []
        rows = []
        for obj, attrs in objects:
            names.append(obj)
            rows.append(universe.subset(attrs).bits)
        return cls(tuple(names), universe, tuple(rows))

    @classmethod
    def empty(cls, universe: AttributeUniverse) -> "FormalContext":
        return cls((), universe, ())

    def object_intent(self, obj: str) -> AttributeSet:
        try:
            k = self.objects.index(obj)
        except ValueError:
            raise InputError(f"unknown object {obj!r}") from None
        return self.universe.from_bits(self.rows[k])

    def with_object(self, name: str, attrs: AttributeSet) -> "FormalContext":
        if attrs.universe != self.universe:
            raise UniverseMismatchError("object intent uses a different universe")
        return FormalContext(
            self.objects + (name,), self.universe, self.rows + (attrs.bits,)
        )

    def derive_attributes(self, objs: Iterable[str]) -> AttributeSet:
        """Common attributes of the given objects; all of M for no objects."""
        mask = self.universe.full_mask
        for obj in objs:
            try:
                k = self.objects.index(obj)
            except ValueError:
                raise InputError(f"unknown object {obj!r}") from None
            mask &= self.rows[k]
        return self.universe.from_bits(mask)

    def derive_objects(self, attrs: AttributeSet) -> tuple[str, ...]:
        """Objects holding every given attribute, in object order."""
        if attrs.universe != self.universe:
            raise UniverseMismatchError("attribute set uses a different universe")
        want = attrs.bits
        return tuple(
            obj for obj, row in zip(self.objects, self.rows) if row & want == want
        )

    def intent_closure(self, attrs: AttributeSet) -> AttributeSet:
        """Double derivation of an attribute set."""
        if attrs.universe != self.universe:
            raise UniverseMismatchError("attribute set uses a different universe")
        want = attrs.bits
        mask = self.universe.full_mask
        for row in self.rows:
            if row & want == want:
                mask &= row
        return self.universe.from_bits(mask)

    def holds(self, imp: "Implication") -> bool:
        """Whether the implication is valid here."""
        closure = self.intent_closure(imp.premise)
        return imp.conclusion <= closure
