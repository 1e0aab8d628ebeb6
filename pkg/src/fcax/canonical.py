"""Pseudointents, the Duquenne-Guigues canonical base, and its relative
form for a pair of nested closure operators."""

from __future__ import annotations

from dataclasses import dataclass

from .closure import (
    ClosureOperator,
    PseudoclosedFamily,
    from_context,
    pseudoclosed_sets,
    relative_pseudoclosed,
)
from .context import FormalContext
from .implications import Implication, ImplicationSet


@dataclass(frozen=True)
class CanonicalBase:
    """Implications premise -> closure(premise) over the pseudoclosed premises."""

    implications: ImplicationSet
    premises: PseudoclosedFamily

    def __iter__(self):
        return iter(self.implications)

    def __len__(self) -> int:
        return len(self.implications)


def _base_from_family(family: PseudoclosedFamily, c: ClosureOperator) -> CanonicalBase:
    items = tuple(Implication(p, c(p)) for p in family.sets)
    return CanonicalBase(ImplicationSet.of(c.universe, items), family)


def pseudo_intents(ctx: FormalContext) -> PseudoclosedFamily:
    """Pseudoclosed sets of the intent-closure operator."""
    return pseudoclosed_sets(from_context(ctx))


def canonical_base(ctx: FormalContext) -> CanonicalBase:
    """The minimum-cardinality base for the valid implications of ``ctx``."""
    family = pseudo_intents(ctx)
    return _base_from_family(family, family.against)


def relative_canonical_base(
    lower: ClosureOperator, c: ClosureOperator
) -> CanonicalBase:
    """Premises are the lower-closed pseudoclosed sets of ``c``.

    The result is the smallest implication set that, together with the
    lower operator, pins down exactly the closed sets of ``c``. The lower
    operator must sit below ``c`` pointwise (checked during the scan).
    """
    family = relative_pseudoclosed(lower, c)
    return _base_from_family(family, c)
