"""Implications between attribute sets, closure under implication sets,
entailment and base predicates."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, UniverseMismatchError
from .universe import AttributeSet, AttributeUniverse


@dataclass(frozen=True)
class Implication:
    premise: AttributeSet
    conclusion: AttributeSet

    def __post_init__(self) -> None:
        if self.premise.universe != self.conclusion.universe:
            raise UniverseMismatchError("premise and conclusion use different universes")

    @property
    def universe(self) -> AttributeUniverse:
        return self.premise.universe

    def __repr__(self) -> str:
        return f"{self.premise!r} -> {self.conclusion!r}"


@dataclass(frozen=True)
class ImplicationSet:
    """A duplicate-free collection of implications over one universe."""

    universe: AttributeUniverse
    items: tuple[Implication, ...]

    def __post_init__(self) -> None:
        seen = set()
        for imp in self.items:
            if imp.universe != self.universe:
                raise UniverseMismatchError("implication uses a different universe")
            key = (imp.premise.bits, imp.conclusion.bits)
            if key in seen:
                raise InputError(f"duplicate implication {imp!r}")
            seen.add(key)

    @classmethod
    def of(cls, universe: AttributeUniverse, items: tuple[Implication, ...] | list[Implication] = ()) -> "ImplicationSet":
        deduped: list[Implication] = []
        seen = set()
        for imp in items:
            key = (imp.premise.bits, imp.conclusion.bits)
            if key not in seen:
                seen.add(key)
                deduped.append(imp)
        return cls(universe, tuple(deduped))

    def __iter__(self):
        return iter(self.items)

    def __len__(self) -> int:
        return len(self.items)

    def __contains__(self, imp: Implication) -> bool:
        return imp in self.items

    def add(self, imp: Implication) -> "ImplicationSet":
        if imp in self.items:
            return self
        return ImplicationSet.of(self.universe, self.items + (imp,))

    def remove(self, imp: Implication) -> "ImplicationSet":
        return ImplicationSet.of(
            self.universe, tuple(i for i in self.items if i != imp)
        )

    def closure(self, attrs: AttributeSet) -> AttributeSet:
        """Smallest superset of ``attrs`` closed under every implication.

        Queue-driven: each implication fires at most once, since firing
        makes its conclusion permanent.
        """
        if attrs.universe != self.universe:
            raise UniverseMismatchError("attribute set uses a different universe")
        closed = attrs.bits
        pending = [(i.premise.bits, i.conclusion.bits) for i in self.items]
        changed = True
        while changed and pending:
            changed = False
            remaining = []
            for prem, conc in pending:
                if prem & ~closed == 0:
                    if conc & ~closed:
                        closed |= conc
                        changed = True
                else:
                    remaining.append((prem, conc))
            pending = remaining
        return self.universe.from_bits(closed)

    def is_closed(self, attrs: AttributeSet) -> bool:
        """Whether ``attrs`` is a model: every applicable conclusion holds."""
        bits = attrs.bits
        return all(
            i.premise.bits & ~bits or not (i.conclusion.bits & ~bits)
            for i in self.items
        )

    def entails(self, imp: Implication) -> bool:
        return imp.conclusion <= self.closure(imp.premise)

    def is_base_for(self, ref: "ImplicationSet") -> bool:
        """Sound and complete for ``ref``, by member entailment both ways."""
        if ref.universe != self.universe:
            raise UniverseMismatchError("implication sets use different universes")
        return all(ref.entails(i) for i in self.items) and all(
            self.entails(i) for i in ref.items
        )

    def is_nonredundant_base_for(self, ref: "ImplicationSet") -> bool:
        """A base that stops being one when any single member is removed."""
        if not self.is_base_for(ref):
            raise InputError("candidate is not a base for the reference set")
        return all(not self.remove(i).is_base_for(ref) for i in self.items)
