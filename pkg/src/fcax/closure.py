"""Closure operators on attribute sets: constructors, combinators and
pseudoclosed-set enumeration.

Operators are immutable values with a memoized, pure ``evaluate`` (also
callable). The memo is a per-instance dict keyed by bitmask; concurrent
lookups are safe because entries are only ever written with the same value.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .context import FormalContext
from .errors import InputError, UniverseMismatchError
from .implications import Implication, ImplicationSet
from .partial import PartialContext
from .universe import AttributeSet, AttributeUniverse

OPERATOR_KINDS = ("context", "implications", "partial_context", "identity", "top")


class ClosureOperator:
    """An extensive, monotone, idempotent self-map on subsets of M."""

    __slots__ = ("universe", "name", "_fn", "_memo")

    def __init__(
        self,
        universe: AttributeUniverse,
        fn: Callable[[AttributeSet], AttributeSet],
        name: str = "closure",
    ):
        self.universe = universe
        self.name = name
        self._fn = fn
        self._memo: dict[int, AttributeSet] = {}

    def evaluate(self, attrs: AttributeSet) -> AttributeSet:
        if attrs.universe != self.universe:
            raise UniverseMismatchError("attribute set uses a different universe")
        hit = self._memo.get(attrs.bits)
        if hit is None:
            hit = self._fn(attrs)
            self._memo[attrs.bits] = hit
        return hit

    __call__ = evaluate

    def is_closed(self, attrs: AttributeSet) -> bool:
        return self.evaluate(attrs).bits == attrs.bits

    def __repr__(self) -> str:
        return f"<{self.name} on {list(self.universe.attributes)}>"


def from_context(ctx: FormalContext) -> ClosureOperator:
    return ClosureOperator(ctx.universe, ctx.intent_closure, "intent-closure")


def from_implications(ls: ImplicationSet) -> ClosureOperator:
    return ClosureOperator(ls.universe, ls.closure, "implication-closure")


def from_partial_context(pctx: PartialContext) -> ClosureOperator:
    return ClosureOperator(
        pctx.universe, pctx.consistent_closure, "consistent-closure"
    )


def identity_operator(universe: AttributeUniverse) -> ClosureOperator:
    return ClosureOperator(universe, lambda attrs: attrs, "identity")


def top_operator(universe: AttributeUniverse) -> ClosureOperator:
    full = universe.full()
    return ClosureOperator(universe, lambda attrs: full, "top")


def make_operator(kind: str, data=None) -> ClosureOperator:
    """Dispatch on a kind tag; ``data`` is the corresponding carrier."""
    if kind == "context":
        return from_context(data)
    if kind == "implications":
        return from_implications(data)
    if kind == "partial_context":
        return from_partial_context(data)
    if kind == "identity":
        return identity_operator(data)
    if kind == "top":
        return top_operator(data)
    raise InputError(f"unknown operator kind {kind!r}; expected one of {OPERATOR_KINDS}")


def meet(c1: ClosureOperator, c2: ClosureOperator) -> ClosureOperator:
    """Pointwise intersection; again a closure operator."""
    if c1.universe != c2.universe:
        raise UniverseMismatchError("operators act on different universes")
    return ClosureOperator(
        c1.universe, lambda attrs: c1(attrs) & c2(attrs), f"meet({c1.name},{c2.name})"
    )


def refine_with_implication(c: ClosureOperator, imp: Implication) -> ClosureOperator:
    """Restrict the closed sets of ``c`` to those also closed under ``imp``.

    Evaluation alternates ``c`` with single-implication closure until the
    fixpoint; one round is not enough because either step can re-enable
    the other.
    """
    if imp.universe != c.universe:
        raise UniverseMismatchError("implication uses a different universe")
    universe = c.universe
    prem, conc = imp.premise.bits, imp.conclusion.bits

    def evaluate(attrs: AttributeSet) -> AttributeSet:
        bits = attrs.bits
        while True:
            if prem & ~bits == 0:
                bits |= conc
            closed = c(universe.from_bits(bits)).bits
            if closed == bits:
                return universe.from_bits(bits)
            bits = closed

    return ClosureOperator(universe, evaluate, f"{c.name}+rule")


@dataclass(frozen=True)
class LawReport:
    """Outcome of checking the three closure-operator axioms."""

    violations: tuple[str, ...]
    exhaustive: bool
    checked: int

    @property
    def ok(self) -> bool:
        return not self.violations


def check_closure_laws(
    c: ClosureOperator,
    exhaustive_limit: int = 12,
    samples: int = 300,
    rng: random.Random | None = None,
) -> LawReport:
    """Verify extensivity, monotonicity and idempotency.

    Exhaustive over the powerset when ``|M| <= exhaustive_limit``, random
    sampling otherwise. Returns a report; an empty violation list passes.
    """
    universe = c.universe
    n = len(universe)
    violations: list[str] = []
    checked = 0

    def probe(x: AttributeSet) -> None:
        nonlocal checked
        cx = c(x)
        checked += 1
        if not x <= cx:
            violations.append(f"not extensive at {x!r}: c = {cx!r}")
        elif c(cx).bits != cx.bits:
            violations.append(f"not idempotent at {x!r}: c = {cx!r}, cc = {c(cx)!r}")

    def probe_pair(x: AttributeSet, y: AttributeSet) -> None:
        nonlocal checked
        checked += 1
        if not c(x) <= c(y):
            violations.append(f"not monotone on {x!r} <= {y!r}")

    if n <= exhaustive_limit:
        for x in universe.subsets():
            probe(x)
        for y_bits in range(1 << n):
            y = universe.from_bits(y_bits)
            x_bits = y_bits
            while True:  # submask walk enumerates exactly the subsets of y
                probe_pair(universe.from_bits(x_bits), y)
                if x_bits == 0:
                    break
                x_bits = (x_bits - 1) & y_bits
        return LawReport(tuple(violations), True, checked)

    rng = rng or random.Random(0)
    full = universe.full_mask
    for _ in range(samples):
        x = universe.from_bits(rng.getrandbits(n) & full)
        probe(x)
        extra = universe.from_bits(rng.getrandbits(n) & full)
        probe_pair(x, x | extra)
    return LawReport(tuple(violations), False, checked)


@dataclass(frozen=True)
class PseudoclosedFamily:
    """Pseudoclosed sets in cardinality-ascending order.

    ``relative_to`` holds the lower operator when the relative notion was
    used; plain pseudoclosedness leaves it None.
    """

    sets: tuple[AttributeSet, ...]
    against: ClosureOperator
    relative_to: ClosureOperator | None = None

    def __iter__(self):
        return iter(self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def as_bits(self) -> frozenset[int]:
        return frozenset(s.bits for s in self.sets)


def pseudoclosed_sets(c: ClosureOperator) -> PseudoclosedFamily:
    """All P with c(P) != P whose pseudoclosed proper subsets stay inside P.

    Scanned by cardinality so every pseudoclosed proper subset is already
    known when P is tested.
    """
    universe = c.universe
    n = len(universe)
    found: list[tuple[int, int]] = []  # (premise bits, closure bits)
    out: list[AttributeSet] = []
    for size in range(n + 1):
        for picked in combinations(range(n), size):
            bits = 0
            for i in picked:
                bits |= 1 << i
            p = universe.from_bits(bits)
            cp = c(p)
            if cp.bits == bits:
                continue
            if all(
                not (q & ~bits == 0 and q != bits) or cq & ~bits == 0
                for q, cq in found
            ):
                found.append((bits, cp.bits))
                out.append(p)
    return PseudoclosedFamily(tuple(out), c)


def relative_pseudoclosed(
    c1: ClosureOperator, c2: ClosureOperator
) -> PseudoclosedFamily:
    """The c1-closed P with c2(P) != P, recursively bounded as above.

    Requires c1 to sit below c2 pointwise; violations are reported as they
    are encountered by the scan.
    """
    if c1.universe != c2.universe:
        raise UniverseMismatchError("operators act on different universes")
    universe = c1.universe
    n = len(universe)
    found: list[tuple[int, int]] = []
    out: list[AttributeSet] = []
    for size in range(n + 1):
        for picked in combinations(range(n), size):
            bits = 0
            for i in picked:
                bits |= 1 << i
            p = universe.from_bits(bits)
            c2p = c2(p)
            if not c1(p) <= c2p:
                raise InputError(
                    f"lower operator exceeds upper operator at {p!r}"
                )
            if c1(p).bits != bits or c2p.bits == bits:
                continue
            if all(
                not (q & ~bits == 0 and q != bits) or cq & ~bits == 0
                for q, cq in found
            ):
                found.append((bits, c2p.bits))
                out.append(p)
    return PseudoclosedFamily(tuple(out), c2, c1)
