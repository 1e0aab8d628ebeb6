from __future__ import annotations

import random

import pytest

from fcax import (
    AttributeUniverse,
    FormalContext,
    Implication,
    InputError,
    UniverseMismatchError,
)

from oracles import random_context


def test_single_object_row(k0, abc):
    assert k0.derive_attributes(["g1"]).names == ("a", "b")


def test_empty_object_set_derives_all_attributes(k0, abc):
    assert k0.derive_attributes([]) == abc.full()


def test_intersecting_rows(k0):
    assert k0.derive_attributes(["g1", "g2"]).names == ("a",)


def test_unknown_object_rejected(k0):
    with pytest.raises(InputError):
        k0.derive_attributes(["nope"])


def test_derive_objects(k0, abc):
    assert k0.derive_objects(abc.subset("b")) == ("g1",)
    assert k0.derive_objects(abc.empty()) == ("g1", "g2", "g3")
    assert k0.derive_objects(abc.subset("bc")) == ()


def test_intent_closure_examples(k0, abc):
    assert k0.intent_closure(abc.subset("b")).names == ("a", "b")
    assert k0.intent_closure(abc.subset("a")).names == ("a",)
    assert k0.intent_closure(abc.subset("bc")) == abc.full()


def test_holds_examples(k0, abc):
    assert k0.holds(Implication(abc.empty(), abc.subset("a")))
    assert k0.holds(Implication(abc.subset("b"), abc.subset("a")))
    assert not k0.holds(Implication(abc.subset("a"), abc.subset("b")))


def test_empty_context_closure_is_full(abc):
    ctx = FormalContext.empty(abc)
    for attrs in abc.subsets():
        assert ctx.intent_closure(attrs) == abc.full()


def test_duplicate_object_names_rejected(abc):
    with pytest.raises(InputError):
        FormalContext.build(abc, [("g", "a"), ("g", "b")])


def test_universe_mismatch_rejected(k0):
    other = AttributeUniverse.of(["a", "b", "c", "d"])
    with pytest.raises(UniverseMismatchError):
        k0.intent_closure(other.subset("a"))


def test_with_object_extends(k0, abc):
    grown = k0.with_object("g4", abc.subset("bc"))
    assert grown.object_intent("g4").names == ("b", "c")
    assert len(k0.objects) == 3  # original untouched


def _all_contexts(max_objects: int, max_attributes: int):
    for n_obj in range(max_objects + 1):
        for n_attr in range(max_attributes + 1):
            universe = AttributeUniverse.of([f"m{i}" for i in range(n_attr)])
            names = tuple(f"g{i}" for i in range(n_obj))
            for incidence in range(1 << (n_obj * n_attr)):
                rows = tuple(
                    incidence >> (k * n_attr) & universe.full_mask
                    for k in range(n_obj)
                )
                yield FormalContext(names, universe, rows)


def _check_derivation_laws(ctx: FormalContext) -> None:
    universe = ctx.universe
    full_objects = set(ctx.objects)
    subsets = list(universe.subsets())
    object_subsets = [
        {ctx.objects[i] for i in range(len(ctx.objects)) if pick >> i & 1}
        for pick in range(1 << len(ctx.objects))
    ]

    # antitone both ways
    for a1 in subsets:
        for a2 in subsets:
            if a1 <= a2:
                assert set(ctx.derive_objects(a2)) <= set(ctx.derive_objects(a1))
    for b1 in object_subsets:
        for b2 in object_subsets:
            if b1 <= b2:
                assert ctx.derive_attributes(b2) <= ctx.derive_attributes(b1)

    # extensive and triple prime on both sides
    for attrs in subsets:
        derived = set(ctx.derive_objects(attrs))
        assert attrs <= ctx.derive_attributes(derived)  # A <= A''
        assert set(ctx.derive_objects(ctx.derive_attributes(derived))) == derived
    for objs in object_subsets:
        common = ctx.derive_attributes(objs)
        assert objs <= set(ctx.derive_objects(common))  # B <= B''
        assert ctx.derive_attributes(ctx.derive_objects(common)) == common

    # Galois: A <= B' iff B <= A'
    for attrs in subsets:
        for objs in object_subsets:
            lhs = attrs <= ctx.derive_attributes(objs)
            rhs = objs <= set(ctx.derive_objects(attrs))
            assert lhs == rhs


def test_derivation_laws_exhaustive_small():
    for ctx in _all_contexts(2, 2):
        _check_derivation_laws(ctx)


def test_derivation_laws_random_larger():
    rng = random.Random(7)
    universe = AttributeUniverse.of(["a", "b", "c", "d", "e"])
    for _ in range(25):
        ctx = random_context(rng, universe, max_objects=4)
        _check_derivation_laws(ctx)
