from __future__ import annotations

import random

import pytest

from fcax import (
    AttributeUniverse,
    CONFIRM,
    Confirm,
    ExpertLog,
    FullCounterexample,
    Implication,
    ImplicationSet,
    InputError,
    PartialCounterexample,
    PartialObjectDescription,
    RejectedAnswerError,
    audit_consistency,
    explore_general,
    full_oracle,
    identity_operator,
    masked_partial_oracle,
    oracle_full,
    oracle_partial,
    partial_oracle,
    adversarial_pair,
    top_operator,
    validate_reply,
)

from oracles import random_context


def imp(universe, premise, conclusion):
    return Implication(universe.subset(premise), universe.subset(conclusion))


def test_oracle_full_examples(k0, abc):
    assert isinstance(oracle_full(k0, imp(abc, "", "a")), Confirm)
    reply = oracle_full(k0, imp(abc, "b", "c"))
    assert isinstance(reply, FullCounterexample)
    assert reply.example.names == ("a", "b")
    assert isinstance(oracle_full(k0, imp(abc, "a", "a")), Confirm)


def test_oracle_partial_examples(k0, k1, abc):
    assert isinstance(oracle_partial(k1, imp(abc, "c", "a")), Confirm)
    reply = oracle_partial(k1, imp(abc, "", "a"))
    assert isinstance(reply, PartialCounterexample)
    assert reply.description.positive.names == ("b",)
    assert reply.description.negative.names == ("a", "c")
    reply = oracle_partial(k0, imp(abc, "a", "b"))
    assert reply.description.positive.names == ("a", "c")
    assert reply.description.negative.names == ("b",)


def test_oracle_replies_pass_shape_invariants():
    rng = random.Random(47)
    for _ in range(200):
        n = rng.randrange(1, 6)
        universe = AttributeUniverse.of([f"m{i}" for i in range(n)])
        ctx = random_context(rng, universe)
        full = universe.full_mask
        question = Implication(
            universe.from_bits(rng.getrandbits(n) & full),
            universe.from_bits(rng.getrandbits(n) & full),
        )
        for oracle in (oracle_full, oracle_partial):
            validate_reply(question, oracle(ctx, question))


def test_oracle_theory_closed_under_entailment():
    rng = random.Random(53)
    for _ in range(60):
        n = rng.randrange(1, 5)
        universe = AttributeUniverse.of([f"m{i}" for i in range(n)])
        ctx = random_context(rng, universe)
        full = universe.full_mask
        confirmed = []
        for _ in range(4):
            q = Implication(
                universe.from_bits(rng.getrandbits(n) & full),
                universe.from_bits(rng.getrandbits(n) & full),
            )
            if isinstance(oracle_full(ctx, q), Confirm):
                confirmed.append(q)
        ls = ImplicationSet.of(universe, tuple(confirmed))
        probe = Implication(
            universe.from_bits(rng.getrandbits(n) & full),
            universe.from_bits(rng.getrandbits(n) & full),
        )
        if ls.entails(probe):
            assert isinstance(oracle_full(ctx, probe), Confirm)
            assert isinstance(oracle_partial(ctx, probe), Confirm)


def test_validate_reply_errors(abc):
    question = imp(abc, "b", "c")
    with pytest.raises(RejectedAnswerError) as err:
        validate_reply(question, PartialCounterexample(
            PartialObjectDescription(abc.subset("a"), abc.subset("c"))
        ))
    assert err.value.reason == "premise-not-covered"
    with pytest.raises(RejectedAnswerError) as err:
        validate_reply(question, PartialCounterexample(
            PartialObjectDescription(abc.subset("ab"), abc.empty())
        ))
    assert err.value.reason == "conclusion-not-contradicted"
    validate_reply(question, CONFIRM)  # always fine


def test_audit_consistency_examples(abc):
    log = ExpertLog()
    log = log.append(imp(abc, "a", "b"), CONFIRM)
    log = log.append(imp(abc, "a", "c"), FullCounterexample(abc.subset("ac")))
    assert len(audit_consistency(log)) == 1

    only_confirms = ExpertLog().append(imp(abc, "a", "b"), CONFIRM)
    assert audit_consistency(only_confirms) == []

    fine = ExpertLog()
    fine = fine.append(imp(abc, "a", "b"), CONFIRM)
    fine = fine.append(
        imp(abc, "a", "c"),
        PartialCounterexample(
            PartialObjectDescription(abc.subset("a"), abc.subset("c"))
        ),
    )
    assert audit_consistency(fine) == []


def test_audit_on_oracle_logs_is_empty():
    rng = random.Random(59)
    for _ in range(40):
        n = rng.randrange(1, 5)
        universe = AttributeUniverse.of([f"m{i}" for i in range(n)])
        ctx = random_context(rng, universe)
        full = universe.full_mask
        log = ExpertLog()
        for _ in range(6):
            q = Implication(
                universe.from_bits(rng.getrandbits(n) & full),
                universe.from_bits(rng.getrandbits(n) & full),
            )
            log = log.append(q, oracle_partial(ctx, q))
        assert audit_consistency(log) == []


def test_masked_oracle_yields_legal_partial_replies(k0, abc):
    expert = masked_partial_oracle(k0, abc.subset("c"))
    reply = expert(imp(abc, "a", "b"))
    assert isinstance(reply, PartialCounterexample)
    pod = reply.description
    assert "c" not in pod.positive and "c" not in pod.negative
    validate_reply(imp(abc, "a", "b"), reply)
    assert not pod.is_full


def test_masked_oracle_keeps_refuting_attribute(k0, abc):
    # hiding the only denied conclusion attribute must not break the reply
    expert = masked_partial_oracle(k0, abc.subset("b"))
    question = imp(abc, "a", "b")
    reply = expert(question)
    validate_reply(question, reply)


def test_adversarial_pair_splits_on_m(abc, k1):
    result = explore_general(
        identity_operator(abc), top_operator(abc), partial_oracle(k1)
    )
    # replay the run: pick the first logged question and a conclusion
    # attribute outside the certain closure of its premise at that point
    for k, (question, _) in enumerate(result.trace.final.log):
        prefix = result.trace.prefix(k)
        before = prefix.states[-1]
        candidates = [
            m
            for m in question.conclusion.names
            if m not in before.certain(question.premise)
        ]
        assert candidates, "asked question was already decided"
        m = candidates[0]
        reject, confirm = adversarial_pair(prefix, question, m)
        probe = Implication(question.premise, abc.singleton(m))
        assert not isinstance(reject(probe), Confirm)
        assert isinstance(confirm(probe), Confirm)
        # both replay the locked trace verbatim
        for logged_q, logged_r in before.log:
            assert reject(logged_q) == logged_r
            assert confirm(logged_q) == logged_r
        # and both produce internally consistent logs over the probes
        for expert in (reject, confirm):
            log = ExpertLog()
            for logged_q, _ in before.log:
                log = log.append(logged_q, expert(logged_q))
            reply = expert(probe)
            if not isinstance(reply, Confirm):
                log = log.append(probe, reply)
            assert audit_consistency(log) == []


def test_adversarial_pair_rejects_decided_questions(abc, k1):
    result = explore_general(
        identity_operator(abc), top_operator(abc), partial_oracle(k1)
    )
    trace = result.trace
    question, _ = trace.final.log.entries[0]
    with pytest.raises(InputError):
        adversarial_pair(trace.prefix(0), question, "nope-not-there")
    # an already-confirmed conclusion attribute cannot be split
    confirmed_q = trace.final.log.confirmed()[0]
    final_prefix = trace.prefix(len(trace.states) - 1)
    with pytest.raises(InputError):
        adversarial_pair(
            final_prefix, confirmed_q, confirmed_q.conclusion.names[0]
        )
