"""File formats: Burmeister .cxt contexts, implication and partial-context
JSON, and JSON-lines event traces."""

from __future__ import annotations

import json
from typing import Iterable

from .context import FormalContext
from .errors import ParseError
from .implications import Implication, ImplicationSet
from .partial import PartialContext, PartialObjectDescription
from .universe import AttributeUniverse


def parse_cxt(data: bytes | str) -> FormalContext:
    """Parse a Burmeister context file.

    Layout: ``B``, blank line, object count, attribute count, blank line,
    object names, attribute names, one ``X``/``.`` row per object.
    """
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    lines = text.split("\n")

    def need(idx: int, what: str) -> str:
        if idx >= len(lines):
            raise ParseError(f"unexpected end of file; expected {what}", idx + 1)
        return lines[idx]

    if need(0, "format tag 'B'").strip() != "B":
        raise ParseError("expected Burmeister format tag 'B'", 1)
    if need(1, "blank line").strip():
        raise ParseError("expected a blank line after the format tag", 2)
    try:
        n_objects = int(need(2, "object count").strip())
        n_attributes = int(need(3, "attribute count").strip())
    except ValueError as exc:
        raise ParseError(f"expected a count: {exc}", 3) from None
    if n_objects < 0 or n_attributes < 0:
        raise ParseError("counts must be non-negative", 3)
    if need(4, "blank line").strip():
        raise ParseError("expected a blank line after the counts", 5)

    base = 5
    objects = [need(base + k, "object name") for k in range(n_objects)]
    attributes = [
        need(base + n_objects + k, "attribute name") for k in range(n_attributes)
    ]
    universe = AttributeUniverse.of(attributes)

    rows = []
    row_base = base + n_objects + n_attributes
    for k in range(n_objects):
        line = need(row_base + k, "incidence row")
        if len(line) != n_attributes:
            raise ParseError(
                f"incidence row has width {len(line)}, expected {n_attributes}",
                row_base + k + 1,
            )
        bits = 0
        for i, ch in enumerate(line):
            if ch == "X":
                bits |= 1 << i
            elif ch != ".":
                raise ParseError(
                    f"incidence characters must be 'X' or '.', found {ch!r}",
                    row_base + k + 1,
                )
        rows.append(bits)
    for k in range(row_base + n_objects, len(lines)):
        if lines[k].strip():
            raise ParseError("trailing content after the incidence rows", k + 1)
    return FormalContext(tuple(objects), universe, tuple(rows))


def serialize_cxt(ctx: FormalContext) -> str:
    lines = ["B", "", str(len(ctx.objects)), str(len(ctx.universe)), ""]
    lines.extend(ctx.objects)
    lines.extend(ctx.universe.attributes)
    n = len(ctx.universe)
    for row in ctx.rows:
        lines.append("".join("X" if row >> i & 1 else "." for i in range(n)))
    return "\n".join(lines) + "\n"


def implications_to_json(items: Iterable[Implication]) -> list[dict]:
    return [
        {"premise": list(i.premise.names), "conclusion": list(i.conclusion.names)}
        for i in items
    ]


def implications_from_json(
    universe: AttributeUniverse, data: list[dict]
) -> ImplicationSet:
    items = tuple(
        Implication(
            universe.subset(entry.get("premise", ())),
            universe.subset(entry.get("conclusion", ())),
        )
        for entry in data
    )
    return ImplicationSet.of(universe, items)


def partial_context_to_json(pctx: PartialContext) -> list[dict]:
    return [
        {"positive": list(p.positive.names), "negative": list(p.negative.names)}
        for p in pctx
    ]


def partial_context_from_json(
    universe: AttributeUniverse, data: list[dict]
) -> PartialContext:
    return PartialContext.of(
        universe,
        (
            PartialObjectDescription(
                universe.subset(entry.get("positive", ())),
                universe.subset(entry.get("negative", ())),
            )
            for entry in data
        ),
    )


def events_to_jsonl(events: Iterable[dict]) -> str:
    return "".join(json.dumps(event, sort_keys=True) + "\n" for event in events)


def events_from_jsonl(text: str) -> list[dict]:
    events = []
    for k, line in enumerate(text.splitlines()):
        if not line.strip():
            continue
        try:
            events.append(json.loads(line))
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON event: {exc}", k + 1) from None
    return events
