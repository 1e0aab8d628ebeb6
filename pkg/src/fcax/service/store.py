"""Session persistence: one append-only JSON-lines event log per session.

The log is the source of truth. Rebuilding a session replays its events
through the exploration state machine, re-verifying every logged question
against the recomputed one, so a reloaded session is bit-for-bit the one
that was persisted.
"""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path

from ..closure import (
    ClosureOperator,
    from_context,
    from_implications,
    from_partial_context,
    top_operator,
)
from ..context import FormalContext
from ..errors import ConsistencyError, FcaxError, InputError, RejectedAnswerError
from ..experts import CONFIRM, ExpertReply, PartialCounterexample
from ..exploration import (
    ExplorationState,
    apply_answer,
    pose,
    replay_events,
    reply_to_event,
    start_exploration,
)
from ..formats import implications_from_json, parse_cxt, partial_context_from_json
from ..partial import PartialObjectDescription
from ..universe import AttributeUniverse


class NotFoundError(FcaxError):
    """No session with the requested id."""


class ConflictError(FcaxError):
    """The answer targets a question that is no longer pending."""


@dataclass
class Session:
    id: str
    config: dict
    state: ExplorationState
    events: list[dict]
    prior_context: FormalContext | None
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @property
    def status(self) -> str:
        if self.state.finished:
            return "finished"
        return "awaiting-answer" if self.state.pending else "awaiting-question"

    @property
    def answered(self) -> int:
        return sum(1 for e in self.events if e["event"] in ("confirm", "counterexample"))

    @property
    def questions_asked(self) -> int:
        return sum(1 for e in self.events if e["event"] == "question")

    def counterexample_objects(self) -> FormalContext:
        """The positives of the working context, as auto-named objects.

        Classical sessions extend their prior example context; general
        sessions expose the working descriptions directly.
        """
        base = self.prior_context
        universe = self.state.universe
        if base is None:
            base = FormalContext.empty(universe)
        grown = base
        serial = 0
        for pod in self.state.working:
            serial += 1
            name = f"x{serial}"
            while name in grown.objects:
                serial += 1
                name = f"x{serial}"
            grown = grown.with_object(name, pod.positive)
        return grown


def build_operators(
    config: dict,
) -> tuple[AttributeUniverse, ClosureOperator, ClosureOperator, FormalContext | None]:
    """Derive the starting operator pair from a session config.

    The background implications seed the certain operator; prior examples
    (a context or a partial context) seed the universal one. The
    prerequisite that certain knowledge stays below universal knowledge is
    equivalent to the background holding in the examples, which is checked
    here description by description.
    """
    universe = AttributeUniverse.of(config["attributes"])
    background = implications_from_json(universe, config.get("background", []))
    certain = from_implications(background)
    prior_context: FormalContext | None = None
    if config.get("examples_cxt"):
        prior_context = parse_cxt(config["examples_cxt"])
        if prior_context.universe != universe:
            raise InputError(
                "the example context declares different attributes than the session"
            )
        for imp in background:
            if not prior_context.holds(imp):
                raise InputError(
                    f"background implication {imp!r} does not hold in the examples"
                )
        universal = from_context(prior_context)
    elif config.get("examples"):
        pctx = partial_context_from_json(universe, config["examples"])
        for pod in pctx:
            if not background.closure(pod.positive).isdisjoint(pod.negative):
                raise InputError(
                    f"background implications contradict example {pod!r}"
                )
        universal = from_partial_context(pctx)
    else:
        universal = top_operator(universe)
    return universe, certain, universal, prior_context


class SessionStore:
    """Concurrent session registry backed by per-session event logs."""

    def __init__(self, root: Path | str):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._sessions: dict[str, Session] = {}
        self._registry_lock = threading.Lock()

    def _path(self, session_id: str) -> Path:
        return self.root / f"{session_id}.jsonl"

    def _append(self, session: Session, events: list[dict]) -> None:
        with self._path(session.id).open("a", encoding="utf-8") as fh:
            for event in events:
                fh.write(json.dumps(event, sort_keys=True) + "\n")
        session.events.extend(events)

    def create(self, config: dict) -> Session:
        universe, certain, universal, prior = build_operators(config)
        state = pose(start_exploration(certain, universal, config["strategy"]))
        session_id = config.get("id") or uuid.uuid4().hex
        config = dict(config, id=session_id)
        session = Session(session_id, config, state, [], prior)
        with self._registry_lock:
            if self._path(session_id).exists():
                raise InputError(f"session {session_id} already exists")
            self._path(session_id).write_text(
                json.dumps({"event": "config", "config": config}, sort_keys=True) + "\n",
                encoding="utf-8",
            )
            self._sessions[session_id] = session
        self._append(session, [self._cursor_event(state)])
        return session

    @staticmethod
    def _cursor_event(state: ExplorationState) -> dict:
        if state.finished:
            return {"event": "finished"}
        question = state.pending
        return {
            "event": "question",
            "premise": list(question.premise.names),
            "conclusion": list(question.conclusion.names),
        }

    def get(self, session_id: str) -> Session:
        with self._registry_lock:
            session = self._sessions.get(session_id)
        if session is not None:
            return session
        return self._load(session_id)

    def _load(self, session_id: str) -> Session:
        path = self._path(session_id)
        if not path.exists():
            raise NotFoundError(f"no session {session_id}")
        lines = path.read_text(encoding="utf-8").splitlines()
        events = [json.loads(line) for line in lines if line.strip()]
        if not events or events[0].get("event") != "config":
            raise InputError(f"session log {path} lacks a config line")
        config = events[0]["config"]
        universe, certain, universal, prior = build_operators(config)
        state = replay_events(certain, universal, config["strategy"], events[1:])
        if state.pending is None and not state.finished:
            state = pose(state)
        session = Session(session_id, config, state, events[1:], prior)
        with self._registry_lock:
            self._sessions.setdefault(session_id, session)
            return self._sessions[session_id]

    def list_sessions(self) -> list[Session]:
        with self._registry_lock:
            known = set(self._sessions)
        for path in sorted(self.root.glob("*.jsonl")):
            if path.stem not in known:
                self._load(path.stem)
        with self._registry_lock:
            return sorted(self._sessions.values(), key=lambda s: s.id)

    def answer(self, session_id: str, reply: ExpertReply, seq: int | None = None) -> Session:
        session = self.get(session_id)
        with session.lock:
            if session.state.finished:
                raise ConflictError("the exploration already finished")
            if seq is not None and seq != session.answered:
                raise ConflictError(
                    f"answer targets question {seq} but the session is at {session.answered}"
                )
            if session.config["mode"] == "classical" and isinstance(
                reply, PartialCounterexample
            ):
                if not reply.description.is_full:
                    raise RejectedAnswerError(
                        "not-full-description",
                        "classical sessions need every attribute marked present or absent",
                    )
            try:
                state = apply_answer(session.state, reply)
            except ConsistencyError as exc:
                detail = str(exc)
                if isinstance(reply, PartialCounterexample):
                    pod = reply.description
                    for imp in session.state.confirmed:
                        if imp.premise <= pod.positive and not pod.negative.isdisjoint(
                            imp.conclusion
                        ):
                            detail = (
                                f"the counterexample denies "
                                f"{pod.negative & imp.conclusion!r}, required by the "
                                f"confirmed implication {imp!r}"
                            )
                            break
                raise RejectedAnswerError("conflicts-with-confirmed", detail) from exc
            state = pose(state)
            session.state = state
            self._append(session, [reply_to_event(reply), self._cursor_event(state)])
            return session


def answer_from_payload(
    universe: AttributeUniverse,
    confirm: bool,
    positive: list[str] | None,
    negative: list[str] | None,
) -> ExpertReply:
    if confirm:
        return CONFIRM
    pos = universe.subset(positive or ())
    neg = universe.subset(negative or ())
    if not pos.isdisjoint(neg):
        raise RejectedAnswerError(
            "overlap", f"attributes {pos & neg!r} marked both present and absent"
        )
    return PartialCounterexample(PartialObjectDescription(pos, neg))
