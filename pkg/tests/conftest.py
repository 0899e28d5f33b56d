import sys

import numpy as np
import pytest
from hypothesis import strategies as st

from skelbc.graph import Graph, load_edge_list
from skelbc.partition import Partition


def assert_close(actual, expected, rel=1e-9):
    actual = np.asarray(actual, dtype=float)
    expected = np.asarray(expected, dtype=float)
    assert actual.shape == expected.shape
    scale = np.maximum(np.maximum(np.abs(actual), np.abs(expected)), 1.0)
    worst = float(np.max(np.abs(actual - expected) / scale, initial=0.0))
    assert worst <= rel, f"max relative error {worst:.3g} > {rel}\n{actual}\n{expected}"


@pytest.fixture
def p3():
    return load_edge_list("a b\nb c\n")


@pytest.fixture
def p4():
    return load_edge_list("a b\nb c\nc d\n")


@pytest.fixture
def p5():
    return load_edge_list("a b\nb c\nc d\nd e\n")


@pytest.fixture
def c4():
    return load_edge_list("a b\nb c\nc d\nd a\n")


@pytest.fixture
def k4():
    return load_edge_list("a b\na c\na d\nb c\nb d\nc d\n")


@pytest.fixture
def star4():
    return load_edge_list("hub l1\nhub l2\nhub l3\nhub l4\n")


@pytest.fixture
def two_triangles():
    # x and y are the only endpoints of the bridge
    return load_edge_list("a b\nb x\nx a\nx y\ny c\nc d\nd y\n")


@st.composite
def graphs(draw, min_nodes=2, max_nodes=12, max_weight=5, density=None):
    """Random simple graphs with integer weights; may be disconnected."""
    n = draw(st.integers(min_nodes, max_nodes))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if density is None:
        mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    else:
        rnd = draw(st.randoms(use_true_random=False))
        mask = [rnd.random() < density for _ in pairs]
    weights = draw(
        st.lists(st.integers(1, max_weight), min_size=len(pairs), max_size=len(pairs))
    )
    edges = [(u, v, float(w)) for (u, v), keep, w in zip(pairs, mask, weights) if keep]
    return Graph([f"n{i}" for i in range(n)], edges)


@st.composite
def partitions(draw, n, max_parts=6):
    k = draw(st.integers(1, max_parts))
    return Partition(draw(st.lists(st.integers(0, k - 1), min_size=n, max_size=n)))


@st.composite
def instances(draw, min_nodes=2, max_nodes=12, min_targets=2):
    """(graph, partition, targets) triples."""
    g = draw(graphs(min_nodes=max(min_nodes, min_targets), max_nodes=max_nodes))
    part = draw(partitions(g.n))
    targets = draw(
        st.lists(st.integers(0, g.n - 1), min_size=min_targets, max_size=g.n, unique=True)
    )
    return g, part, sorted(targets)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("tests.test_acceptance")
    if mod is not None and mod.LINES:
        terminalreporter.section("acceptance criteria")
        for line in mod.LINES:
            terminalreporter.write_line(line)
