"""Expert answer contracts, oracle experts over hidden contexts, and
consistency auditing of answer logs.

An expert is any callable from an implication to an :class:`ExpertReply`.
Oracles derive their answers from a hidden formal context and pick the
first witnessing object, so runs against them are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable, Iterable, Union

from .context import FormalContext
from .errors import InputError, RejectedAnswerError
from .implications import Implication
from .partial import PartialObjectDescription
from .universe import AttributeSet

if TYPE_CHECKING:
    from .exploration import ExplorationTrace


@dataclass(frozen=True)
class Confirm:
    def __repr__(self) -> str:
        return "Confirm"


@dataclass(frozen=True)
class FullCounterexample:
    example: AttributeSet

    def __repr__(self) -> str:
        return f"FullCounterexample({self.example!r})"


@dataclass(frozen=True)
class PartialCounterexample:
    description: PartialObjectDescription

    def __repr__(self) -> str:
        return f"PartialCounterexample{self.description!r}"


ExpertReply = Union[Confirm, FullCounterexample, PartialCounterexample]
Expert = Callable[[Implication], ExpertReply]

CONFIRM = Confirm()


def validate_reply(question: Implication, reply: ExpertReply) -> None:
    """Raise :class:`RejectedAnswerError` unless the reply fits the question."""
    if isinstance(reply, Confirm):
        return
    if isinstance(reply, FullCounterexample):
        example = reply.example
        if not question.premise <= example:
            raise RejectedAnswerError(
                "premise-not-covered",
                f"counterexample {example!r} lacks premise attributes "
                f"{question.premise - example!r}",
            )
        if question.conclusion <= example:
            raise RejectedAnswerError(
                "conclusion-not-contradicted",
                f"counterexample {example!r} satisfies the whole conclusion",
            )
        return
    if isinstance(reply, PartialCounterexample):
        pod = reply.description
        if not question.premise <= pod.positive:
            raise RejectedAnswerError(
                "premise-not-covered",
                f"positive part {pod.positive!r} lacks premise attributes "
                f"{question.premise - pod.positive!r}",
            )
        if pod.negative.isdisjoint(question.conclusion):
            raise RejectedAnswerError(
                "conclusion-not-contradicted",
                f"negative part {pod.negative!r} denies no conclusion attribute",
            )
        return
    raise RejectedAnswerError("overlap", f"unrecognized reply {reply!r}")


@dataclass(frozen=True)
class ExpertLog:
    """Append-only record of asked questions and their replies."""

    entries: tuple[tuple[Implication, ExpertReply], ...] = ()

    def append(self, question: Implication, reply: ExpertReply) -> "ExpertLog":
        return ExpertLog(self.entries + ((question, reply),))

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def confirmed(self) -> tuple[Implication, ...]:
        return tuple(q for q, r in self.entries if isinstance(r, Confirm))


@dataclass(frozen=True)
class ConsistencyViolation:
    confirmed: Implication
    counterexample_for: Implication
    reply: ExpertReply
    detail: str


def _witnesses(hidden: FormalContext, question: Implication) -> Iterable[tuple[str, AttributeSet]]:
    for obj, row in zip(hidden.objects, hidden.rows):
        intent = hidden.universe.from_bits(row)
        if question.premise <= intent and not question.conclusion <= intent:
            yield obj, intent


def oracle_full(hidden: FormalContext, question: Implication) -> ExpertReply:
    """Confirm valid implications, else return the first witnessing row."""
    if question.universe != hidden.universe:
        raise InputError("question universe differs from the hidden context")
    if hidden.holds(question):
        return CONFIRM
    _, intent = next(iter(_witnesses(hidden, question)))
    return FullCounterexample(intent)


def oracle_partial(hidden: FormalContext, question: Implication) -> ExpertReply:
    """Like :func:`oracle_full` but frames the witness as a full description."""
    if question.universe != hidden.universe:
        raise InputError("question universe differs from the hidden context")
    if hidden.holds(question):
        return CONFIRM
    _, intent = next(iter(_witnesses(hidden, question)))
    return PartialCounterexample(
        PartialObjectDescription(intent, intent.complement())
    )


def full_oracle(hidden: FormalContext) -> Expert:
    return lambda question: oracle_full(hidden, question)


def partial_oracle(hidden: FormalContext) -> Expert:
    return lambda question: oracle_partial(hidden, question)


def masked_partial_oracle(hidden: FormalContext, hide: AttributeSet) -> Expert:
    """A partial oracle that withholds the ``hide`` attributes.

    Hidden attributes are dropped from both parts of each counterexample,
    except where the reply would stop refuting the question: premise
    attributes stay positive and the smallest denied conclusion attribute
    stays negative.
    """

    def expert(question: Implication) -> ExpertReply:
        reply = oracle_partial(hidden, question)
        if isinstance(reply, Confirm):
            return reply
        pod = reply.description
        positive = pod.positive - (hide - question.premise)
        negative = pod.negative - hide
        if negative.isdisjoint(question.conclusion):
            denied = pod.negative & question.conclusion
            keep = denied.universe.from_bits(denied.bits & -denied.bits)
            negative = negative | keep
        return PartialCounterexample(PartialObjectDescription(positive, negative))

    return expert


def audit_consistency(log: ExpertLog) -> list[ConsistencyViolation]:
    """Clashes between confirmed implications and logged counterexamples.

    A full counterexample must be closed under every confirmed implication;
    a partial one covering a confirmed premise must not deny its conclusion.
    The check is order-independent, as the expert contract demands.
    """
    violations: list[ConsistencyViolation] = []
    confirmed = [q for q, r in log.entries if isinstance(r, Confirm)]
    for question, reply in log.entries:
        if isinstance(reply, Confirm):
            continue
        if isinstance(reply, FullCounterexample):
            positive, negative = reply.example, reply.example.complement()
        else:
            positive, negative = reply.description.positive, reply.description.negative
        for imp in confirmed:
            if imp.premise <= positive and not negative.isdisjoint(imp.conclusion):
                violations.append(
                    ConsistencyViolation(
                        imp,
                        question,
                        reply,
                        f"counterexample for {question!r} denies "
                        f"{negative & imp.conclusion!r} entailed by confirmed {imp!r}",
                    )
                )
    return violations


def adversarial_pair(
    trace: "ExplorationTrace", question: Implication, m: str
) -> tuple[Expert, Expert]:
    """Two experts that replay ``trace`` but split on ``premise -> {m}``.

    The first rejects it (its theory is exactly the certain knowledge after
    the trace); the second confirms it (its theory adds the context of
    positives padded with ``m`` where permitted). Their existence certifies
    that the next question is genuinely undecided.
    """
    state = trace.states[-1]
    universe = question.universe
    if m not in question.conclusion:
        raise InputError(f"attribute {m!r} is not in the question conclusion")
    certain, universal, working = state.certain, state.universal, state.working
    target = universe.singleton(m)
    if target <= certain(question.premise):
        raise InputError(
            f"{question.premise!r} -> {{{m}}} is already entailed; nothing to split"
        )
    if not question.conclusion <= universal(question.premise):
        raise InputError("question conclusion exceeds current universal knowledge")
    replay = {q: r for q, r in state.log.entries}

    def reject_expert(imp: Implication) -> ExpertReply:
        if imp in replay:
            return replay[imp]
        closed = certain(imp.premise)
        if imp.conclusion <= closed:
            return CONFIRM
        return PartialCounterexample(
            PartialObjectDescription(closed, closed.complement())
        )

    padded_rows = []
    for pod in working:
        if m in pod.negative:
            padded_rows.append(pod.positive.bits)
        else:
            padded_rows.append(certain(pod.positive.add(m)).bits)
    aux = FormalContext(
        tuple(f"x{k + 1}" for k in range(len(padded_rows))),
        universe,
        tuple(padded_rows),
    )

    def confirm_expert(imp: Implication) -> ExpertReply:
        if imp in replay:
            return replay[imp]
        closed = aux.intent_closure(imp.premise) & universal(imp.premise)
        if imp.conclusion <= closed:
            return CONFIRM
        return PartialCounterexample(
            PartialObjectDescription(closed, closed.complement())
        )

    return reject_expert, confirm_expert
