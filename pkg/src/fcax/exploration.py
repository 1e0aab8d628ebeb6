"""The exploration loops: an incremental state machine over a pair of
closure operators (certain and universal knowledge), plus the classical
loop over a growing formal context.

One session alternates :func:`pose` (compute the next undecided question)
and :func:`apply_answer` (absorb a confirmation into the certain operator
or a counterexample into the working partial context). It finishes when
both operators agree everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable

from .closure import (
    ClosureOperator,
    from_implications,
    from_partial_context,
    identity_operator,
    meet,
    refine_with_implication,
)
from .context import FormalContext
from .errors import (
    ConsistencyError,
    ExplorationAborted,
    InputError,
    RejectedAnswerError,
    UniverseMismatchError,
)
from .experts import (
    CONFIRM,
    Confirm,
    Expert,
    ExpertLog,
    ExpertReply,
    FullCounterexample,
    PartialCounterexample,
    validate_reply,
)
from .implications import Implication, ImplicationSet
from .lectic import next_closed
from .partial import PartialContext, PartialObjectDescription
from .universe import AttributeSet, AttributeUniverse

STRATEGIES = ("minimal", "max-conclusion")


def default_interaction_cap(n_attributes: int) -> int:
    """Safe ceiling on expert interactions for a finite universe."""
    return 3**n_attributes


@dataclass(frozen=True, eq=False)
class ExplorationState:
    """Immutable snapshot of one exploration session.

    ``cursor`` is the premise of the last settled question; the question
    sweep resumes after it. Counterexamples leave the cursor alone so the
    same premise is reconsidered against the shrunken universal operator.
    """

    certain: ClosureOperator
    universal: ClosureOperator
    certain_start: ClosureOperator
    universal_start: ClosureOperator
    working: PartialContext
    confirmed: ImplicationSet
    log: ExpertLog
    pending: Implication | None = None
    strategy: str = "minimal"
    cursor: AttributeSet | None = None
    finished: bool = False

    @property
    def universe(self) -> AttributeUniverse:
        return self.certain.universe

    @property
    def counterexample_count(self) -> int:
        return len(self.working)


@dataclass(frozen=True, eq=False)
class ExplorationTrace:
    """Snapshots before the first and after every expert interaction."""

    states: tuple[ExplorationState, ...]
    outcome: str = "running"  # or "finished"

    def prefix(self, interactions: int) -> "ExplorationTrace":
        """The trace as it looked after the given number of interactions."""
        return ExplorationTrace(self.states[: interactions + 1], "running")

    @property
    def final(self) -> ExplorationState:
        return self.states[-1]


@dataclass(frozen=True, eq=False)
class ExplorationResult:
    final_operator: ClosureOperator
    final_context: PartialContext
    confirmed: ImplicationSet
    trace: ExplorationTrace


def start_exploration(
    certain: ClosureOperator,
    universal: ClosureOperator,
    strategy: str = "minimal",
) -> ExplorationState:
    if certain.universe != universal.universe:
        raise UniverseMismatchError("operators act on different universes")
    if strategy not in STRATEGIES:
        raise InputError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    return ExplorationState(
        certain=certain,
        universal=universal,
        certain_start=certain,
        universal_start=universal,
        working=PartialContext.of(certain.universe),
        confirmed=ImplicationSet.of(certain.universe),
        log=ExpertLog(),
    )


def next_question(state: ExplorationState) -> Implication | None:
    """The next undecided implication under the state's strategy.

    ``minimal`` sweeps the closed sets of the certain operator in lectic
    order, so premises are subset-minimal among the undecided closed sets;
    ``max-conclusion`` sweeps all subsets. Both ask for the full universal
    closure of the premise and return None exactly when the two operators
    agree on every subset (checking closed sets of the certain operator
    suffices, by monotonicity).
    """
    if state.pending is not None:
        raise InputError("a question is already pending")
    if state.finished:
        return None
    sweep = (
        state.certain
        if state.strategy == "minimal"
        else identity_operator(state.universe)
    )
    if state.cursor is None:
        candidate = sweep(state.universe.empty())
    else:
        candidate = next_closed(sweep, state.cursor)
    while candidate is not None:
        upper = state.universal(candidate)
        if state.certain(candidate).bits != upper.bits:
            return Implication(candidate, upper)
        candidate = next_closed(sweep, candidate)
    return None


def pose(state: ExplorationState) -> ExplorationState:
    """Attach the next question, or mark the state finished."""
    question = next_question(state)
    if question is None:
        return replace(state, finished=True)
    return replace(state, pending=question)


def apply_answer(state: ExplorationState, reply: ExpertReply) -> ExplorationState:
    """Advance the session by one expert interaction.

    Confirmations refine the certain operator and re-normalize the stored
    counterexamples; counterexamples join the working partial context. The
    universal operator is recomputed as the meet of its initial value with
    the consistent closure of the working context. Rejected answers leave
    the state untouched by raising.
    """
    if state.pending is None:
        raise RejectedAnswerError("no-pending-question", "nothing to answer")
    question = state.pending
    if isinstance(reply, Confirm):
        certain = refine_with_implication(state.certain, question)
        working = state.working.normalize(certain)
        return replace(
            state,
            certain=certain,
            universal=meet(state.universal_start, from_partial_context(working)),
            working=working,
            confirmed=state.confirmed.add(question),
            log=state.log.append(question, reply),
            pending=None,
            cursor=question.premise,
        )
    validate_reply(question, reply)
    if isinstance(reply, FullCounterexample):
        pod = PartialObjectDescription(reply.example, reply.example.complement())
    else:
        pod = reply.description
    working = state.working.add(pod).normalize(state.certain)
    return replace(
        state,
        universal=meet(state.universal_start, from_partial_context(working)),
        working=working,
        log=state.log.append(question, reply),
        pending=None,
    )


def check_termination_condition(
    certain: ClosureOperator, universal: ClosureOperator
) -> bool:
    """Whether the interval between the two operators is trivial."""
    if certain.universe != universal.universe:
        raise UniverseMismatchError("operators act on different universes")
    current: AttributeSet | None = certain(certain.universe.empty())
    while current is not None:
        if universal(current).bits != current.bits:
            return False
        current = next_closed(certain, current)
    return True


def explore_general(
    certain: ClosureOperator,
    universal: ClosureOperator,
    expert: Expert,
    strategy: str = "minimal",
    max_interactions: int | None = None,
) -> ExplorationResult:
    """Run the state machine against an expert until the interval closes."""
    state = start_exploration(certain, universal, strategy)
    cap = (
        max_interactions
        if max_interactions is not None
        else default_interaction_cap(len(state.universe))
    )
    snapshots = [state]
    interactions = 0
    while True:
        state = pose(state)
        if state.finished:
            break
        if interactions >= cap:
            raise ExplorationAborted(interactions, cap)
        state = apply_answer(state, expert(state.pending))
        interactions += 1
        snapshots.append(state)
    snapshots[-1] = state  # carry the finished flag on the last snapshot
    trace = ExplorationTrace(tuple(snapshots), "finished")
    return ExplorationResult(state.certain, state.working, state.confirmed, trace)


def explore_classical(
    ctx: FormalContext,
    background: ImplicationSet,
    expert: Expert,
    max_interactions: int | None = None,
) -> tuple[ImplicationSet, FormalContext]:
    """Classical exploration over a growing formal context.

    Premises sweep the sets closed under the known implications in lectic
    order. A premise that is not an intent of the working context is asked
    with its intent closure as conclusion; confirmations extend the known
    implications and move on, counterexamples add an object (auto-named)
    and retry the same premise. Returns the final known implications
    (background included) and the final context.
    """
    universe = ctx.universe
    if background.universe != universe:
        raise UniverseMismatchError("background uses a different universe")
    cap = (
        max_interactions
        if max_interactions is not None
        else default_interaction_cap(len(universe))
    )
    known = background
    working = ctx
    interactions = 0
    object_serial = 0
    premise: AttributeSet | None = known.closure(universe.empty())
    while premise is not None:
        conclusion = working.intent_closure(premise)
        if conclusion.bits == premise.bits:
            premise = next_closed(from_implications(known), premise)
            continue
        if interactions >= cap:
            raise ExplorationAborted(interactions, cap)
        question = Implication(premise, conclusion)
        reply = expert(question)
        interactions += 1
        if isinstance(reply, Confirm):
            known = known.add(question)
            premise = next_closed(from_implications(known), premise)
        elif isinstance(reply, FullCounterexample):
            validate_reply(question, reply)
            if not known.is_closed(reply.example):
                raise ConsistencyError(
                    f"counterexample {reply.example!r} for {question!r} is not "
                    "closed under the confirmed implications"
                )
            object_serial += 1
            name = f"x{object_serial}"
            while name in working.objects:
                object_serial += 1
                name = f"x{object_serial}"
            working = working.with_object(name, reply.example)
        else:
            raise RejectedAnswerError(
                "not-full-description",
                "classical exploration takes full counterexamples only",
            )
    return known, working


# --- trace events -----------------------------------------------------------
#
# One JSON-able dict per line: question / confirm / counterexample / finished.
# Replaying events through the state machine reproduces the final state and
# cross-checks each logged question against the recomputed one.


def reply_to_event(reply: ExpertReply) -> dict:
    if isinstance(reply, Confirm):
        return {"event": "confirm"}
    if isinstance(reply, FullCounterexample):
        return {"event": "counterexample", "example": list(reply.example.names)}
    return {
        "event": "counterexample",
        "positive": list(reply.description.positive.names),
        "negative": list(reply.description.negative.names),
    }


def event_to_reply(universe: AttributeUniverse, event: dict) -> ExpertReply:
    if event["event"] == "confirm":
        return CONFIRM
    if event["event"] != "counterexample":
        raise InputError(f"not an answer event: {event!r}")
    if "example" in event:
        return FullCounterexample(universe.subset(event["example"]))
    return PartialCounterexample(
        PartialObjectDescription(
            universe.subset(event.get("positive", ())),
            universe.subset(event.get("negative", ())),
        )
    )


def trace_events(state: ExplorationState) -> list[dict]:
    events: list[dict] = []
    for question, reply in state.log:
        events.append(
            {
                "event": "question",
                "premise": list(question.premise.names),
                "conclusion": list(question.conclusion.names),
            }
        )
        events.append(reply_to_event(reply))
    if state.finished:
        events.append({"event": "finished"})
    return events


def replay_events(
    certain: ClosureOperator,
    universal: ClosureOperator,
    strategy: str,
    events: list[dict],
    strict: bool = True,
) -> ExplorationState:
    """Re-drive the state machine from an event log.

    With ``strict`` set, logged questions and the finished marker must
    match what the machine recomputes; mismatches raise
    :class:`InputError`. Question events may be omitted entirely.
    """
    state = start_exploration(certain, universal, strategy)
    universe = state.universe
    for event in events:
        kind = event.get("event")
        if kind == "question":
            if state.pending is None:
                state = pose(state)
            expected = state.pending
            if strict:
                if expected is None:
                    raise InputError(
                        f"log has question {event!r} but exploration is finished"
                    )
                logged = Implication(
                    universe.subset(event.get("premise", ())),
                    universe.subset(event.get("conclusion", ())),
                )
                if logged != expected:
                    raise InputError(
                        f"logged question {logged!r} differs from recomputed {expected!r}"
                    )
        elif kind in ("confirm", "counterexample"):
            if state.pending is None:
                state = pose(state)
            if state.pending is None:
                raise InputError(f"answer event {event!r} after exploration finished")
            state = apply_answer(state, event_to_reply(universe, event))
        elif kind == "finished":
            if state.pending is None:
                state = pose(state)
            if strict and not state.finished:
                raise InputError(
                    "log claims the exploration finished but questions remain"
                )
        else:
            raise InputError(f"unknown event {event!r}")
    return state


def state_fingerprint(state: ExplorationState) -> dict:
    """Canonical content of a state, for equality checks across replays."""
    return {
        "confirmed": [
            [list(i.premise.names), list(i.conclusion.names)] for i in state.confirmed
        ],
        "working": [
            [list(p.positive.names), list(p.negative.names)] for p in state.working
        ],
        "pending": None
        if state.pending is None
        else [list(state.pending.premise.names), list(state.pending.conclusion.names)],
        "cursor": None if state.cursor is None else list(state.cursor.names),
        "finished": state.finished,
        "interactions": len(state.log),
    }
