from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fcax import AttributeUniverse, FormalContext


@pytest.fixture
def abc() -> AttributeUniverse:
    return AttributeUniverse.of(["a", "b", "c"])


@pytest.fixture
def k0(abc: AttributeUniverse) -> FormalContext:
    # g1: {a,b}, g2: {a,c}, g3: {a}
    return FormalContext.build(abc, [("g1", "ab"), ("g2", "ac"), ("g3", "a")])


@pytest.fixture
def k1(abc: AttributeUniverse) -> FormalContext:
    # h1: {a}, h2: {b}
    return FormalContext.build(abc, [("h1", "a"), ("h2", "b")])
