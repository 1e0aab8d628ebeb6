"""HTTP surface of the exploration session service."""

from __future__ import annotations

import os
import tempfile
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse

from ..errors import InputError, RejectedAnswerError
from ..formats import implications_to_json, partial_context_to_json, serialize_cxt
from ..exploration import ExplorationState
from .models import (
    AnswerModel,
    DescriptionModel,
    FinishedSummaryModel,
    ImplicationModel,
    ProgressModel,
    QuestionModel,
    SessionCreate,
    SessionStateModel,
    SessionSummaryModel,
)
from .store import ConflictError, NotFoundError, Session, SessionStore, answer_from_payload


def _progress(session: Session) -> ProgressModel:
    return ProgressModel(
        confirmed=len(session.state.confirmed),
        counterexamples=len(session.state.working),
        questions_asked=session.questions_asked,
    )


def _question(session: Session) -> QuestionModel | None:
    pending = session.state.pending
    if pending is None:
        return None
    return QuestionModel(
        premise=list(pending.premise.names),
        conclusion=list(pending.conclusion.names),
        seq=session.answered,
        progress=_progress(session),
    )


def _summary(session: Session) -> SessionSummaryModel:
    return SessionSummaryModel(
        id=session.id,
        label=session.config.get("label", ""),
        mode=session.config["mode"],
        strategy=session.config["strategy"],
        status=session.status,
        attributes=list(session.config["attributes"]),
        progress=_progress(session),
    )


def _state(session: Session) -> SessionStateModel:
    state: ExplorationState = session.state
    return SessionStateModel(
        **_summary(session).model_dump(),
        question=_question(session),
        confirmed=[
            ImplicationModel(
                premise=list(i.premise.names), conclusion=list(i.conclusion.names)
            )
            for i in state.confirmed
        ],
        counterexamples=[
            DescriptionModel(
                positive=list(p.positive.names), negative=list(p.negative.names)
            )
            for p in state.working
        ],
    )


def _finished_summary(session: Session) -> FinishedSummaryModel:
    state = session.state
    return FinishedSummaryModel(
        confirmed=[
            ImplicationModel(
                premise=list(i.premise.names), conclusion=list(i.conclusion.names)
            )
            for i in state.confirmed
        ],
        counterexamples=[
            DescriptionModel(
                positive=list(p.positive.names), negative=list(p.negative.names)
            )
            for p in state.working
        ],
        questions_asked=session.questions_asked,
    )


def create_app(sessions_dir: str | os.PathLike | None = None) -> FastAPI:
    root = Path(sessions_dir) if sessions_dir else Path(tempfile.mkdtemp(prefix="fcax-"))
    store = SessionStore(root)
    app = FastAPI(title="fcax exploration service", version="0.1.0")
    app.state.store = store
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    @app.exception_handler(NotFoundError)
    async def not_found(request: Request, exc: NotFoundError):
        return JSONResponse({"error": "not-found", "detail": str(exc)}, status_code=404)

    @app.exception_handler(ConflictError)
    async def conflict(request: Request, exc: ConflictError):
        return JSONResponse({"error": "conflict", "detail": str(exc)}, status_code=409)

    @app.exception_handler(RejectedAnswerError)
    async def rejected(request: Request, exc: RejectedAnswerError):
        return JSONResponse(
            {
                "error": "rejected-answer",
                "detail": {"reason": exc.reason, "message": exc.detail},
            },
            status_code=422,
        )

    @app.exception_handler(InputError)
    async def invalid(request: Request, exc: InputError):
        return JSONResponse(
            {"error": "invalid-input", "detail": str(exc)}, status_code=422
        )

    @app.exception_handler(RequestValidationError)
    async def invalid_request(request: Request, exc: RequestValidationError):
        return JSONResponse(
            {"error": "invalid-input", "detail": exc.errors()}, status_code=422
        )

    @app.post("/sessions", response_model=SessionStateModel, status_code=201)
    def create_session(payload: SessionCreate):
        session = store.create(payload.model_dump())
        return _state(session)

    @app.get("/sessions", response_model=list[SessionSummaryModel])
    def list_sessions():
        return [_summary(s) for s in store.list_sessions()]

    @app.get("/sessions/{session_id}/state", response_model=SessionStateModel)
    def get_state(session_id: str):
        return _state(store.get(session_id))

    @app.get("/sessions/{session_id}/question")
    def get_question(session_id: str):
        session = store.get(session_id)
        question = _question(session)
        if question is None:
            return {
                "finished": True,
                "summary": _finished_summary(session).model_dump(),
            }
        return question.model_dump()

    @app.post("/sessions/{session_id}/answer", response_model=SessionStateModel)
    def post_answer(session_id: str, payload: AnswerModel):
        session = store.get(session_id)
        reply = answer_from_payload(
            session.state.universe, payload.confirm, payload.positive, payload.negative
        )
        session = store.answer(session_id, reply, payload.seq)
        return _state(session)

    @app.get("/sessions/{session_id}/export")
    def export_session(session_id: str, format: str = "json"):
        session = store.get(session_id)
        if format == "json":
            return {"id": session.id, "config": session.config, "events": session.events}
        if format == "implications":
            return implications_to_json(session.state.confirmed)
        if format == "cxt":
            return PlainTextResponse(serialize_cxt(session.counterexample_objects()))
        if format == "partial":
            return partial_context_to_json(session.state.working)
        raise InputError(f"unknown export format {format!r}")

    return app
