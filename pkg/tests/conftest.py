from itertools import combinations

import pytest
from hypothesis import strategies as st

from pathideals import RootedTree, line_tree
from pathideals.samples import (eleven_vertex_tree, fitting_partitioned_tree,
                                unfit_partitioned_tree)


@pytest.fixture
def eleven():
    return eleven_vertex_tree()


@pytest.fixture
def unfit():
    return unfit_partitioned_tree()


@pytest.fixture
def fitting():
    return fitting_partitioned_tree()


@st.composite
def trees(draw, min_n=1, max_n=10):
    """Trees on 1..n rooted at 1; vertex i hangs below some j < i."""
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(1, i - 1)) for i in range(2, n + 1)]
    return RootedTree.from_edges(1, zip(parents, range(2, n + 1)))


@st.composite
def tree_and_t(draw, min_n=2, max_n=10):
    tree = draw(trees(min_n=max(2, min_n), max_n=max_n))
    return tree, draw(st.integers(2, tree.n))


def brute_minimal_covers(facets, vertices):
    """Minimal transversals by trying every subset; independent of the library."""
    facets = [frozenset(f) for f in facets]
    vertices = sorted(vertices)
    covers = []
    for k in range(len(vertices) + 1):
        for c in combinations(vertices, k):
            c = frozenset(c)
            if all(c & f for f in facets) and not any(p <= c for p in covers):
                covers.append(c)
    return covers


def brute_paths(tree, t):
    """Sequences of t distinct vertices joined by directed edges, by plain DFS."""
    out = []

    def dfs(path):
        if len(path) == t:
            out.append(tuple(path))
            return
        for c in tree.children(path[-1]):
            dfs(path + [c])

    for v in tree.vertices:
        dfs([v])
    return sorted(out)


__all__ = ["trees", "tree_and_t", "brute_minimal_covers", "brute_paths", "line_tree"]


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
