"""
Pytest configuration and shared fixtures for qclass tests.
"""
from pathlib import Path
from typing import Generator

import pytest

from qclass.core.config import QClassConfig
from qclass.core.config_parser import set_config
from qclass.digraph.graph import Digraph
from qclass.dposet.poset import DoublePoset
from qclass.groups.group import PermGroup, parse_group


INSTANCES = Path(__file__).resolve().parent.parent / "instances"


@pytest.fixture(autouse=True)
def default_config() -> Generator[None, None, None]:
    """Every test starts from the default configuration."""
    set_config(QClassConfig())
    yield
    set_config(None)


@pytest.fixture
def instances_dir() -> Path:
    return INSTANCES


@pytest.fixture
def fig1() -> DoublePoset:
    """b and d below a and c; not locally special."""
    return DoublePoset(
        "abcd",
        [("b", "a"), ("d", "a"), ("b", "c"), ("d", "c")],
        [("c", "b"), ("a", "d")],
    )


@pytest.fixture
def fig2() -> DoublePoset:
    """Locally special, Aut = {e, (b d)}."""
    return DoublePoset(
        "abcd",
        [("a", "b"), ("b", "c"), ("d", "c"), ("a", "d")],
        [("b", "a"), ("d", "c"), ("b", "c"), ("d", "a")],
    )


@pytest.fixture
def fig3() -> DoublePoset:
    """a, b, c below d, e in the first order, the opposite in the second."""
    low, high = "abc", "de"
    return DoublePoset(
        "abcde",
        [(x, y) for x in low for y in high],
        [(y, x) for x in low for y in high],
    )


@pytest.fixture
def fig3_group(fig3: DoublePoset) -> PermGroup:
    return parse_group(["(a b c)", "(d e)"], fig3.elements)


@pytest.fixture
def antichain() -> DoublePoset:
    return DoublePoset("ab")


@pytest.fixture
def weak_chain() -> DoublePoset:
    return DoublePoset("abc", [("a", "b"), ("b", "c")], [("a", "b"), ("b", "c")], {"a": 1, "b": 2, "c": 1})


@pytest.fixture
def four_cycle() -> Digraph:
    return Digraph("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])


@pytest.fixture
def four_cycle_group(four_cycle: Digraph) -> PermGroup:
    return parse_group(["(a b c d)"], four_cycle.vertices)


@pytest.fixture
def single_edge() -> Digraph:
    return Digraph("ab", [("a", "b")])
