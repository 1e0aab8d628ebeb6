from __future__ import annotations

import json

import pytest
from click.testing import CliRunner

from fcax import (
    FormalContext,
    ImplicationSet,
    canonical_base,
    explore_classical,
    full_oracle,
    implications_to_json,
    serialize_cxt,
)
from fcax.cli import main


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def k0_file(tmp_path, k0):
    path = tmp_path / "k0.cxt"
    path.write_text(serialize_cxt(k0), encoding="utf-8")
    return path


@pytest.fixture
def k1_file(tmp_path, k1):
    path = tmp_path / "k1.cxt"
    path.write_text(serialize_cxt(k1), encoding="utf-8")
    return path


def test_base_command(runner, k0_file):
    result = runner.invoke(main, ["base", str(k0_file)])
    assert result.exit_code == 0, result.output
    assert json.loads(result.output) == [{"premise": [], "conclusion": ["a"]}]


def test_base_report(runner, k1_file):
    result = runner.invoke(main, ["base", str(k1_file), "--report"])
    assert result.exit_code == 0
    assert json.loads(result.output) == {
        "pseudo_intents": [["c"], ["a", "b"]],
        "base_size": 2,
    }


def test_pseudointents_command(runner, k1_file):
    result = runner.invoke(main, ["pseudointents", str(k1_file)])
    assert result.exit_code == 0
    assert json.loads(result.output) == [["c"], ["a", "b"]]


def test_show_round_trips(runner, k0_file, k0):
    result = runner.invoke(main, ["show", str(k0_file)])
    assert result.exit_code == 0
    assert result.output == serialize_cxt(k0)


def test_explore_against_oracle_matches_library(runner, tmp_path, k1, k1_file, abc):
    base_out = tmp_path / "base.json"
    trace = tmp_path / "trace.jsonl"
    result = runner.invoke(
        main,
        [
            "explore",
            "--oracle",
            str(k1_file),
            "--base-out",
            str(base_out),
            "--trace",
            str(trace),
        ],
    )
    assert result.exit_code == 0, result.output
    expected = implications_to_json(canonical_base(k1).implications)
    assert json.loads(base_out.read_text()) == expected
    verify = runner.invoke(main, ["verify", str(trace)])
    assert verify.exit_code == 0, verify.output
    assert "FAIL" not in verify.output


def test_explore_classical_matches_library_batch(runner, tmp_path, k1, k1_file, abc):
    base_out = tmp_path / "base.json"
    result = runner.invoke(
        main,
        ["explore", "--mode", "classical", "--oracle", str(k1_file), "--base-out", str(base_out)],
    )
    assert result.exit_code == 0, result.output
    known, _ = explore_classical(
        FormalContext.empty(abc), ImplicationSet.of(abc), full_oracle(k1)
    )
    assert json.loads(base_out.read_text()) == implications_to_json(known)


def test_explore_with_background_asks_nothing(runner, tmp_path, k0, k0_file):
    background = tmp_path / "bg.json"
    background.write_text(
        json.dumps(implications_to_json(canonical_base(k0).implications)),
        encoding="utf-8",
    )
    result = runner.invoke(
        main,
        [
            "explore",
            "--oracle",
            str(k0_file),
            "--background",
            str(background),
            "--examples",
            str(k0_file),
        ],
    )
    assert result.exit_code == 0, result.output
    summary = json.loads(result.output)
    assert summary["questions_asked"] == 0


def test_verify_rejects_tampered_trace(runner, tmp_path, k1, k1_file):
    trace = tmp_path / "trace.jsonl"
    runner.invoke(
        main, ["explore", "--oracle", str(k1_file), "--trace", str(trace)]
    )
    lines = trace.read_text().splitlines()
    # swap the first confirm into a refusal-shaped event the sweep never produced
    tampered = [
        line.replace('"conclusion": ["a", "b", "c"]', '"conclusion": ["b"]')
        for line in lines
    ]
    trace.write_text("\n".join(tampered) + "\n", encoding="utf-8")
    result = runner.invoke(main, ["verify", str(trace)])
    assert result.exit_code == 1


def test_explore_interactive_confirm(runner):
    result = runner.invoke(
        main,
        ["explore", "--attributes", "a,b"],
        input="y\n",
    )
    assert result.exit_code == 0, result.output
    summary = json.loads(result.output[result.output.index("{") :])
    assert summary["confirmed"] == [{"premise": [], "conclusion": ["a", "b"]}]


def test_explore_interactive_counterexample(runner):
    # reject 0 -> {a,b} with an object having a only, then confirm the rest
    result = runner.invoke(
        main,
        ["explore", "--attributes", "a,b"],
        input="n\na\nb\ny\ny\n",
    )
    assert result.exit_code == 0, result.output
    summary = json.loads(result.output[result.output.index("{") :])
    assert summary["counterexamples"] == 1


def test_explore_needs_universe(runner):
    result = runner.invoke(main, ["explore"])
    assert result.exit_code != 0
