import os

import hypothesis
import numpy as np
import pytest
from hypothesis import strategies as st

from hamcomp.models.graph import Graph
from hamcomp.models.partition import ABComponent

np.seterr(all="warn")

hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=500, deadline=None)
hypothesis.settings.register_profile("debugger", report_multiple_bugs=False, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def graphs(draw, min_n=1, max_n=10):
    """Simple graphs as (n, edge list) drawn over all pairs"""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [pair for pair, keep in zip(pairs, mask) if keep])


@st.composite
def labelled_trees(draw, max_n=14, max_a=None):
    """Tree components with an arbitrary A/B labelling"""
    n = draw(st.integers(min_value=1, max_value=max_n))
    parents = [draw(st.integers(min_value=0, max_value=v - 1)) for v in range(1, n)]
    a_vertices = draw(st.sets(st.integers(min_value=0, max_value=n - 1), max_size=max_a))
    return ABComponent.build(range(n), a_vertices, [(p, v) for v, p in enumerate(parents, start=1)])


def cycle_graph(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves):
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def spider_graph():
    """Centre 0, middle vertices 1..3 of degree 2, outer vertices 4..6"""
    return Graph.from_edges(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])


def prism_graph(n):
    """Two n-cycles joined by a perfect matching; cubic, so the strong 4-core is empty"""
    edges = [(i, (i + 1) % n) for i in range(n)] + [(n + i, n + (i + 1) % n) for i in range(n)]
    return Graph.from_edges(2 * n, edges + [(i, n + i) for i in range(n)])


def petersen_graph():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


@pytest.fixture
def k5():
    return Graph.complete(5)


@pytest.fixture
def spider():
    return spider_graph()


@pytest.fixture
def petersen():
    return petersen_graph()
