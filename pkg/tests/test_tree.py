import json

import pytest
from hypothesis import given

from pathideals import (RootedTree, TreeParseError, enumerate_paths, line_tree, parse_tree,
                        random_corpus, random_tree)
from pathideals.tree import height, leaves, level

from conftest import brute_paths, trees

FIG_TEXT = """# eleven-vertex example
root 1
1 2
1 3
2 4
2 5
4 8
4 9
3 6
3 7
6 10
7 11
"""


def test_parse_chain():
    assert parse_tree("root 1\n1 2\n2 3\n") == line_tree(3)


def test_parse_eleven(eleven):
    assert parse_tree(FIG_TEXT) == eleven
    assert eleven.n == 11


def test_parse_json_roundtrip(eleven):
    assert parse_tree(eleven.to_json()) == eleven
    assert parse_tree(eleven.to_text()) == eleven
    assert parse_tree(json.dumps({"root": 1, "edges": [[1, 2]]})) == line_tree(2)


@pytest.mark.parametrize("text, needle", [
    ("root 1\n1 2\n1 2\n", "duplicate edge"),
    ("root 1\n1 2\n3 2\n1 3\n", "multiple parents"),
    ("root 1\n1 2\n3 4\n4 3\n", "cycle"),
    ("root 1\n1 2\n3 4\n", "not connected"),
    ("1 2\n", "missing"),
    ("root 1\n1 2 3\n", "expected"),
    ("root 1\n1 x\n", "not an integer"),
    ("root 1\n1 3\n", "1..2"),
    ("root 1\n2 1\n", "into the root"),
])
def test_parse_errors(text, needle):
    with pytest.raises(TreeParseError, match=needle):
        parse_tree(text)


def test_parse_error_names_line():
    with pytest.raises(TreeParseError) as exc:
        parse_tree("root 1\n1 2\n1 2\n")
    assert exc.value.line == 3
    assert "line 3" in str(exc.value)


def test_bad_json():
    with pytest.raises(TreeParseError):
        parse_tree('{"edges": []}')


def test_levels(eleven):
    assert level(eleven, 1) == 0
    assert level(line_tree(5), 4) == 3
    assert level(eleven, 8) == 3
    with pytest.raises(KeyError):
        level(eleven, 12)


def test_height(eleven):
    assert height(eleven) == 3
    assert height(line_tree(7)) == 6
    assert height(line_tree(1)) == 0


def test_leaves(eleven, unfit):
    assert leaves(line_tree(4)) == {1, 4}
    assert leaves(eleven) == {5, 8, 9, 10, 11}
    assert leaves(unfit) == {1, 3, 7, 9}
    assert leaves(line_tree(1)) == {1}


def test_paths(eleven):
    assert enumerate_paths(line_tree(5), 3) == [(1, 2, 3), (2, 3, 4), (3, 4, 5)]
    assert enumerate_paths(eleven, 4) == [(1, 2, 4, 8), (1, 2, 4, 9), (1, 3, 6, 10), (1, 3, 7, 11)]
    assert enumerate_paths(line_tree(3), 4) == []
    with pytest.raises(ValueError):
        enumerate_paths(eleven, 1)


def test_line_tree():
    assert line_tree(1).n == 1 and line_tree(1).edges() == []
    assert line_tree(4).edges() == [(1, 2), (2, 3), (3, 4)]
    assert line_tree(6).height() == 5
    with pytest.raises(ValueError):
        line_tree(0)


def test_random_tree_deterministic():
    assert random_tree(1, 99).n == 1
    assert random_tree(5, 42) == random_tree(5, 42)
    assert random_tree(8, 1).n == random_tree(8, 2).n == 8
    assert random_corpus(20, 9, seed=3) == random_corpus(20, 9, seed=3)


def test_constructor_rejects_bad_shapes():
    with pytest.raises(ValueError):
        RootedTree(1, {1: [2], 3: [2]})
    with pytest.raises(ValueError):
        RootedTree(1, {2: [3], 3: [2]})


@given(trees(max_n=12))
def test_level_recurrence(tree):
    assert tree.level(tree.root) == 0
    for v in tree.vertices:
        if v != tree.root:
            assert tree.level(v) == tree.level(tree.parent(v)) + 1


@given(trees(min_n=2, max_n=12))
def test_paths_match_dfs(tree):
    for t in range(2, tree.n + 2):
        got = enumerate_paths(tree, t)
        assert got == brute_paths(tree, t)
        for p in got:
            assert [tree.level(v) for v in p] == list(range(tree.level(p[0]), tree.level(p[0]) + t))


def test_line_has_two_leaves():
    for n in range(2, 15):
        assert len(line_tree(n).leaves()) == 2


@given(trees(max_n=10))
def test_reroot_preserves_undirected_edges(tree):
    und = {frozenset(e) for e in tree.edges()}
    for r in tree.vertices:
        other = tree.rerooted(r)
        assert other.root == r
        assert {frozenset(e) for e in other.edges()} == und
