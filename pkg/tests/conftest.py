"""Shared fixtures: four hand-checked single-vertex graphs.

Every expected value asserted against these graphs was derived by hand
from the slot rules and cross-checked with the brute-force oracle.
"""

import pytest

from crosscap import StarGraph


def loops_graph(degree, loops, name="v0"):
    """Single-vertex graph whose edges pair the given slot couples."""
    edges = tuple(((name, a), (name, b)) for a, b in loops)
    return StarGraph.build({name: degree}, edges)


@pytest.fixture
def g1():
    """Degree-4 vertex, two opposite loops: one negative chord, spectrum {1}."""
    return loops_graph(4, [(0, 2), (1, 3)])


@pytest.fixture
def g2():
    """Degree-4 vertex, two adjacent loops: positive chord, orientable gate."""
    return loops_graph(4, [(0, 1), (2, 3)])


@pytest.fixture
def g3():
    """Degree-6 rotating vertex: triad signed (+,-,-), spectrum {2}."""
    return loops_graph(6, [(0, 2), (1, 4), (3, 5)])


@pytest.fixture
def g4():
    """Degree-6 vertex forced to split: positive double chord, orientable gate."""
    return loops_graph(6, [(0, 3), (1, 2), (4, 5)])
