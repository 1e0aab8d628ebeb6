"""Lectic order on attribute sets and Next-Closure enumeration.

The order is decided by the smallest attribute in the symmetric
difference: the set containing it is the larger one. Closed sets of any
closure operator are enumerated strictly ascending in this order.
"""

from __future__ import annotations

from typing import Iterator

from .closure import ClosureOperator
from .errors import UniverseMismatchError
from .universe import AttributeSet

LESS, EQUAL, GREATER = -1, 0, 1


def lectic_cmp(a: AttributeSet, b: AttributeSet) -> int:
    """-1, 0 or 1 as ``a`` is lectically before, equal to or after ``b``."""
    if a.universe != b.universe:
        raise UniverseMismatchError("attribute sets use different universes")
    diff = a.bits ^ b.bits
    if not diff:
        return EQUAL
    low = diff & -diff
    return LESS if b.bits & low else GREATER


def next_closed(c: ClosureOperator, attrs: AttributeSet) -> AttributeSet | None:
    """Lectically smallest closed set of ``c`` after ``attrs``, if any.

    Scans candidate pivots from the <-largest attribute down, closing
    ``(attrs below pivot) + pivot`` and accepting the first closure that
    introduces nothing below the pivot.
    """
    if attrs.universe != c.universe:
        raise UniverseMismatchError("attribute set uses a different universe")
    universe = c.universe
    bits = attrs.bits
    for i in range(len(universe) - 1, -1, -1):
        if bits >> i & 1:
            continue
        below = (1 << i) - 1
        candidate = (bits & below) | 1 << i
        closed = c(universe.from_bits(candidate)).bits
        if closed & below == bits & below:
            return universe.from_bits(closed)
    return None


def enumerate_closed(c: ClosureOperator) -> Iterator[AttributeSet]:
    """All closed sets of ``c``, strictly lectically ascending."""
    current = c(c.universe.empty())
    while current is not None:
        yield current
        current = next_closed(c, current)
