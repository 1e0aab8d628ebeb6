"""Command-line client: canonical bases, exploration runs (interactive or
against a context-backed oracle), trace verification, and the HTTP server."""

from __future__ import annotations

import json
import shutil
import sys
import tempfile
from pathlib import Path

import click

from .canonical import canonical_base, pseudo_intents
from .errors import FcaxError, InputError, RejectedAnswerError
from .experts import CONFIRM, Confirm, audit_consistency, oracle_partial, validate_reply
from .exploration import (
    apply_answer,
    default_interaction_cap,
    event_to_reply,
    pose,
    start_exploration,
)
from .formats import (
    events_from_jsonl,
    implications_to_json,
    parse_cxt,
    serialize_cxt,
)
from .service.store import SessionStore, answer_from_payload, build_operators


@click.group()
def main():
    """Attribute exploration toolkit."""


def _load_context(path: str):
    return parse_cxt(Path(path).read_text(encoding="utf-8"))


@main.command()
@click.argument("context_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--report", is_flag=True, help="emit premises and size instead of the implication list")
def base(context_file: str, report: bool):
    """Duquenne-Guigues canonical base of a context file."""
    ctx = _load_context(context_file)
    result = canonical_base(ctx)
    if report:
        payload = {
            "pseudo_intents": [list(p.names) for p in result.premises],
            "base_size": len(result),
        }
    else:
        payload = implications_to_json(result.implications)
    click.echo(json.dumps(payload, indent=2))


@main.command()
@click.argument("context_file", type=click.Path(exists=True, dir_okay=False))
def pseudointents(context_file: str):
    """Pseudo-intents of a context file."""
    ctx = _load_context(context_file)
    click.echo(json.dumps([list(p.names) for p in pseudo_intents(ctx)], indent=2))


def _prompt_attrs(universe, label: str):
    raw = click.prompt(label, default="", show_default=False).strip()
    names = [n.strip() for n in raw.split(",") if n.strip()]
    return universe.subset(names)


def _human_expert(universe, classical: bool):
    def expert(question):
        click.echo(
            f"\nDoes {list(question.premise.names)} -> "
            f"{list(question.conclusion.names)} hold?"
        )
        if click.confirm("confirm", default=True):
            return CONFIRM
        while True:
            positive = _prompt_attrs(universe, "counterexample has (comma-separated)")
            negative = _prompt_attrs(universe, "counterexample lacks (comma-separated)")
            try:
                reply = answer_from_payload(
                    universe, False, list(positive.names), list(negative.names)
                )
                if classical and not reply.description.is_full:
                    raise RejectedAnswerError(
                        "not-full-description",
                        "classical mode needs every attribute decided",
                    )
                validate_reply(question, reply)
                return reply
            except FcaxError as exc:
                click.echo(f"rejected: {exc}", err=True)

    return expert


@main.command()
@click.option("--oracle", type=click.Path(exists=True, dir_okay=False), help="hidden context answering all questions")
@click.option("--attributes", help="comma-separated attribute universe (when no oracle)")
@click.option("--mode", type=click.Choice(["classical", "general"]), default="general", show_default=True)
@click.option("--strategy", type=click.Choice(["minimal", "max-conclusion"]), default="minimal", show_default=True)
@click.option("--background", type=click.Path(exists=True, dir_okay=False), help="implication JSON seeding the certain knowledge")
@click.option("--examples", type=click.Path(exists=True, dir_okay=False), help="prior examples: .cxt context or partial-context .json")
@click.option("--max-iterations", type=int, default=None, help="expert-interaction cap (default 3^|M|)")
@click.option("--trace", type=click.Path(dir_okay=False), help="write the session event log here")
@click.option("--base-out", type=click.Path(dir_okay=False), help="write the confirmed implications here")
@click.option("--label", default="", help="display label for the session")
def explore(oracle, attributes, mode, strategy, background, examples, max_iterations, trace, base_out, label):
    """Run one exploration, interactively or against an oracle context."""
    config: dict = {"mode": mode, "strategy": strategy, "label": label, "background": []}
    hidden = None
    if oracle:
        hidden = _load_context(oracle)
        config["attributes"] = list(hidden.universe.attributes)
    if background:
        config["background"] = json.loads(Path(background).read_text(encoding="utf-8"))
    if examples:
        text = Path(examples).read_text(encoding="utf-8")
        if examples.endswith(".json"):
            config["examples"] = json.loads(text)
        else:
            config["examples_cxt"] = text
            if "attributes" not in config:
                config["attributes"] = list(parse_cxt(text).universe.attributes)
    if attributes:
        config["attributes"] = [n.strip() for n in attributes.split(",") if n.strip()]
    if "attributes" not in config:
        raise click.UsageError("need --oracle, --examples ctx.cxt or --attributes")

    workdir = Path(tempfile.mkdtemp(prefix="fcax-cli-"))
    store = SessionStore(workdir)
    session = store.create(config)
    universe = session.state.universe
    cap = max_iterations if max_iterations is not None else default_interaction_cap(len(universe))
    expert = (
        (lambda q: oracle_partial(hidden, q))
        if hidden is not None
        else _human_expert(universe, mode == "classical")
    )

    answered = 0
    while session.status == "awaiting-answer":
        if answered >= cap:
            click.echo(f"aborted: hit the interaction cap ({cap})", err=True)
            sys.exit(2)
        question = session.state.pending
        reply = expert(question)
        session = store.answer(session.id, reply)
        answered += 1
        verdict = "confirmed" if isinstance(reply, Confirm) else "counterexample"
        click.echo(
            f"[{answered}] {list(question.premise.names)} -> "
            f"{list(question.conclusion.names)}: {verdict}",
            err=True,
        )

    confirmed = implications_to_json(session.state.confirmed)
    summary = {
        "confirmed": confirmed,
        "counterexamples": len(session.state.working),
        "questions_asked": session.questions_asked,
    }
    click.echo(json.dumps(summary, indent=2))
    if base_out:
        # same bytes as GET /sessions/{id}/export?format=implications
        Path(base_out).write_text(
            json.dumps(confirmed, ensure_ascii=False, separators=(",", ":")),
            encoding="utf-8",
        )
    if trace:
        shutil.copyfile(workdir / f"{session.id}.jsonl", trace)


@main.command()
@click.argument("trace_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--max-universe", type=int, default=10, show_default=True, help="exhaustive final-state checks up to this universe size")
def verify(trace_file: str, max_universe: int):
    """Replay a session log and check the exploration invariants."""
    lines = events_from_jsonl(Path(trace_file).read_text(encoding="utf-8"))
    if not lines or lines[0].get("event") != "config":
        raise InputError("trace must start with a config event")
    config = lines[0]["config"]
    events = lines[1:]
    universe, certain0, universal0, _prior = build_operators(config)

    checks: list[tuple[str, bool, str]] = []
    state = start_exploration(certain0, universal0, config["strategy"])
    questions_ok = True
    nonredundant = True
    for event in events:
        kind = event["event"]
        if kind == "question":
            if state.pending is None:
                state = pose(state)
            logged = (event.get("premise", []), event.get("conclusion", []))
            recomputed = (
                None
                if state.pending is None
                else (
                    list(state.pending.premise.names),
                    list(state.pending.conclusion.names),
                )
            )
            if recomputed is None or (list(logged[0]), list(logged[1])) != recomputed:
                questions_ok = False
                break
            if state.pending.conclusion <= state.certain(state.pending.premise):
                nonredundant = False
        elif kind in ("confirm", "counterexample"):
            if state.pending is None:
                state = pose(state)
            state = apply_answer(state, event_to_reply(universe, event))
        elif kind == "finished":
            state = pose(state)
            if not state.finished:
                questions_ok = False
                break
        else:
            raise InputError(f"unknown event {event!r}")
    checks.append(("questions-replay", questions_ok, "logged questions match the recomputed sweep"))
    checks.append(("non-redundancy", nonredundant, "no asked question was already entailed"))
    violations = audit_consistency(state.log)
    checks.append(("answer-consistency", not violations, f"{len(violations)} expert-contract violations"))
    if state.finished and len(universe) <= max_universe:
        ok = True
        for attrs in universe.subsets():
            value = state.certain(attrs)
            if value != universal0(attrs) & state.working.consistent_closure(attrs):
                ok = False
                break
            if value != state.universal(attrs):
                ok = False
                break
        checks.append(("final-interval", ok, "certain = universal = initial meet working, everywhere"))

    failed = [name for name, ok, _ in checks if not ok]
    for name, ok, detail in checks:
        click.echo(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    sys.exit(1 if failed else 0)


@main.command()
@click.argument("context_file", type=click.Path(exists=True, dir_okay=False))
def show(context_file: str):
    """Round-trip and pretty-print a context file."""
    ctx = _load_context(context_file)
    click.echo(serialize_cxt(ctx), nl=False)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--sessions-dir", type=click.Path(file_okay=False), default=None, help="persist session logs here (default: temp dir)")
def serve(host: str, port: int, sessions_dir):
    """Serve the exploration session API."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(sessions_dir), host=host, port=port)


if __name__ == "__main__":
    main()
