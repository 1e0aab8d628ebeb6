"""Partial contexts: object descriptions with definite positive and
definite negative attributes, refutation, and the maximal-consistent
closure they induce."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable

from .errors import ConsistencyError, InputError, UniverseMismatchError
from .implications import Implication
from .universe import AttributeSet, AttributeUniverse

if TYPE_CHECKING:
    from .closure import ClosureOperator


@dataclass(frozen=True)
class PartialObjectDescription:
    """Disjoint sets of attributes an object definitely has / lacks."""

    positive: AttributeSet
    negative: AttributeSet

    def __post_init__(self) -> None:
        if self.positive.universe != self.negative.universe:
            raise UniverseMismatchError("positive and negative parts use different universes")
        if self.positive.bits & self.negative.bits:
            raise InputError("positive and negative attributes must be disjoint")

    @property
    def universe(self) -> AttributeUniverse:
        return self.positive.universe

    @property
    def is_full(self) -> bool:
        return (self.positive.bits | self.negative.bits) == self.universe.full_mask

    def __repr__(self) -> str:
        return f"(+{self.positive!r}, -{self.negative!r})"


@dataclass(frozen=True)
class PartialContext:
    """A duplicate-free collection of partial object descriptions."""

    universe: AttributeUniverse
    descriptions: tuple[PartialObjectDescription, ...]

    def __post_init__(self) -> None:
        seen = set()
        for pod in self.descriptions:
            if pod.universe != self.universe:
                raise UniverseMismatchError("description uses a different universe")
            key = (pod.positive.bits, pod.negative.bits)
            if key in seen:
                raise InputError(f"duplicate description {pod!r}")
            seen.add(key)

    @classmethod
    def of(
        cls,
        universe: AttributeUniverse,
        descriptions: Iterable[PartialObjectDescription] = (),
    ) -> "PartialContext":
        deduped: list[PartialObjectDescription] = []
        seen = set()
        for pod in descriptions:
            key = (pod.positive.bits, pod.negative.bits)
            if key not in seen:
                seen.add(key)
                deduped.append(pod)
        return cls(universe, tuple(deduped))

    def __iter__(self):
        return iter(self.descriptions)

    def __len__(self) -> int:
        return len(self.descriptions)

    def add(self, pod: PartialObjectDescription) -> "PartialContext":
        if pod.universe != self.universe:
            raise UniverseMismatchError("description uses a different universe")
        key = (pod.positive.bits, pod.negative.bits)
        if any((p.positive.bits, p.negative.bits) == key for p in self.descriptions):
            return self
        return PartialContext(self.universe, self.descriptions + (pod,))

    def refutes(self, imp: Implication) -> bool:
        """Some description covers the premise and denies part of the conclusion."""
        prem, conc = imp.premise.bits, imp.conclusion.bits
        return any(
            prem & ~pod.positive.bits == 0 and conc & pod.negative.bits
            for pod in self.descriptions
        )

    def consistent_closure(self, attrs: AttributeSet) -> AttributeSet:
        """Largest B such that ``attrs -> B`` is not refuted here."""
        if attrs.universe != self.universe:
            raise UniverseMismatchError("attribute set uses a different universe")
        want = attrs.bits
        mask = self.universe.full_mask
        for pod in self.descriptions:
            if want & ~pod.positive.bits == 0:
                mask &= ~pod.negative.bits
        return self.universe.from_bits(mask)

    def normalize(self, certain: "ClosureOperator") -> "PartialContext":
        """Grow each description by the certain knowledge.

        Positives become their closure; an undetermined attribute moves to
        the negatives when assuming it would contradict one. A closure that
        overlaps the negatives means the answers that produced this
        description were mutually inconsistent.
        """
        out: list[PartialObjectDescription] = []
        for pod in self.descriptions:
            closed = certain(pod.positive)
            if closed.bits & pod.negative.bits:
                raise ConsistencyError(
                    f"description {pod!r} clashes with certain knowledge: "
                    f"{closed & pod.negative!r} is both entailed and denied"
                )
            neg = pod.negative.bits
            for i in pod.positive.complement().indices():
                if neg >> i & 1:
                    continue
                reach = certain(self.universe.from_bits(pod.positive.bits | 1 << i))
                if reach.bits & pod.negative.bits:
                    neg |= 1 << i
            out.append(
                PartialObjectDescription(closed, self.universe.from_bits(neg))
            )
        return PartialContext.of(self.universe, out)
