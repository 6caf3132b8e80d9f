import pytest
from hypothesis import given, settings

from pathideals import (RootedTree, classify, clean, is_fitting, is_line, leaf_facet_candidates,
                        line_tree, path_complex, path_ideal, t_branches, t_partition)

from conftest import brute_paths, tree_and_t, trees

# root 1 has two children; facet {1,2,3} carries branches from both 1 and 2
DEG_TWO = RootedTree.from_edges(1, [(1, 2), (2, 3), (1, 4), (4, 5), (5, 6), (2, 7), (7, 8), (8, 9)])
# root is a leaf not reached by the mandatory facets; two root paths to try
TWO_ROOT_CHOICES = RootedTree.from_edges(1, [(1, 2), (2, 3), (2, 4), (3, 5), (5, 6), (4, 7), (7, 8)])
HOOK = RootedTree.from_edges(1, [(1, 2), (2, 3), (1, 4)])


def as_sets(paths):
    return {frozenset(p) for p in paths}


def test_clean(eleven, unfit):
    assert clean(eleven, 4)[1] == {5}
    assert clean(unfit, 3) == (unfit, frozenset())
    for n in range(2, 10):
        for t in range(2, n + 1):
            assert clean(line_tree(n), t) == (line_tree(n), frozenset())
    ctree, removed = clean(HOOK, 3)
    assert removed == {4} and ctree == line_tree(3)


def test_clean_collapses_to_root():
    ctree, removed = clean(RootedTree(1, {1: [2, 3, 4]}), 3)
    assert ctree.n == 1 and removed == {2, 3, 4}


def test_leaf_facet_candidates(eleven, unfit, fitting):
    assert leaf_facet_candidates(clean(eleven, 4)[0], 4) == [path_complex_paths(eleven, 4)]
    (cand,) = leaf_facet_candidates(unfit, 3)
    assert (1, 2, 3) in cand and (1, 2, 4) not in cand
    (cand,) = leaf_facet_candidates(fitting, 3)
    assert as_sets(cand) == {frozenset({2, 5, 8}), frozenset({1, 3, 6}), frozenset({4, 7, 9})}
    cands = leaf_facet_candidates(TWO_ROOT_CHOICES, 3)
    assert [c[0] for c in cands] == [(1, 2, 3), (1, 2, 4)]
    assert leaf_facet_candidates(RootedTree(1), 3) == []


def path_complex_paths(tree, t):
    return sorted(tuple(sorted(f)) for f in path_complex(tree, t).facets)


def test_t_partition(eleven, unfit, fitting):
    assert t_partition(eleven, 4) is None
    cert = t_partition(fitting, 3)
    assert cert.m == 3
    cert = t_partition(unfit, 3)
    assert cert.m == 3
    assert as_sets(cert.facets) == {frozenset({1, 2, 3}), frozenset({4, 5, 7}), frozenset({6, 8, 9})}
    assert t_partition(TWO_ROOT_CHOICES, 3) is None


def test_branches_unfit(unfit):
    cert = t_partition(unfit, 3)
    got = {(frozenset(b.path), b.initial, b.level) for b in cert.branches}
    assert got == {(frozenset({2, 4, 5, 7}), False, 1), (frozenset({2, 4, 5, 6}), False, 1),
                   (frozenset({5, 6, 8, 9}), False, 3)}
    assert cert.deg_gamma == 1


def test_branches_fitting(fitting):
    cert = t_partition(fitting, 3)
    got = {(frozenset(b.path), b.initial, b.level) for b in cert.branches}
    assert got == {(frozenset({1, 2, 5, 8}), True, 0), (frozenset({1, 4, 7, 9}), True, 0)}
    assert cert.deg_gamma == 1


def test_branches_line():
    facets = [(1, 2, 3), (4, 5, 6)]
    # exhaustive: every 4-vertex path of L_6 meeting some facet only in its first vertex
    expected = [p for p in brute_paths(line_tree(6), 4)
                for f in facets if p[0] in f and set(p) & set(f) == {p[0]}]
    (b,) = t_branches(line_tree(6), 3, facets)
    assert [b.path] == expected == [(3, 4, 5, 6)]
    assert (b.attach_vertex, b.attach_facet, b.initial, b.level) == (3, 0, False, 2)


def test_is_fitting(eleven, unfit, fitting):
    assert is_fitting(fitting, 3) == (True, None)
    ok, why = is_fitting(unfit, 3)
    assert not ok and "[5, 6, 8, 9]" in why and "level 3" in why
    ok, why = is_fitting(eleven, 4)
    assert not ok and "not 4-partitioned" in why
    ok, why = is_fitting(DEG_TWO, 3)
    assert not ok and why.startswith("Deg(F_1) = 2")


def test_classify_examples(unfit):
    r = classify(line_tree(6), 3)
    assert r.cohen_macaulay and not r.gorenstein
    r = classify(HOOK, 3)
    assert r.gorenstein and r.complete_intersection and r.matroid and r.all_powers_cm
    assert r.clean_removed == {4}
    r = classify(unfit, 3)
    assert not (r.unmixed or r.cohen_macaulay or r.gorenstein)


def test_classify_zero_ideal():
    r = classify(RootedTree(1, {1: [2, 3, 4]}), 3)
    assert r.zero_ideal and r.cohen_macaulay and r.gorenstein
    assert (r.height, r.krull_dim, r.depth, r.proj_dim) == (0, 4, 4, 0)


def test_classify_rejects_bad_t():
    with pytest.raises(ValueError):
        classify(line_tree(3), 4)


def test_is_line(eleven):
    assert is_line(line_tree(7))
    assert not is_line(eleven)
    assert is_line(RootedTree(1))


def test_chain_cm_iff_t_is_n_or_half():
    for n in range(2, 13):
        for t in range(2, n + 1):
            assert classify(line_tree(n), t).cohen_macaulay == (t == n or 2 * t == n)


def test_report_json(eleven):
    d = classify(eleven, 4).to_dict()
    for key in ("unmixed", "cohen_macaulay", "serre_sr", "gorenstein", "complete_intersection",
                "matroid", "all_powers_cm", "height", "krull_dim", "depth", "proj_dim",
                "zero_ideal", "certificate", "failure_witness"):
        assert key in d


@given(tree_and_t(max_n=12))
def test_cleaning_keeps_generators(case):
    tree, t = case
    ctree, removed = clean(tree, t)
    assert set(tree.paths(t)) == set(ctree.paths(t))
    assert ctree.n + len(removed) == tree.n


@settings(max_examples=300)
@given(tree_and_t(max_n=11))
def test_fitting_iff_unmixed(case):
    tree, t = case
    assert is_fitting(tree, t)[0] == path_complex(tree, t).is_unmixed_by_covers()


@settings(max_examples=200)
@given(tree_and_t(max_n=11))
def test_report_invariants(case):
    tree, t = case
    r = classify(tree, t)
    assert r.unmixed == r.cohen_macaulay == r.serre_sr == r.fitting
    assert r.gorenstein == r.complete_intersection == r.matroid == r.all_powers_cm
    if not r.zero_ideal:
        ctree, _ = clean(tree, t)
        assert r.gorenstein == (ctree.is_line() and ctree.n == t)
    if r.cohen_macaulay and not r.zero_ideal:
        assert r.proj_dim == r.certificate.m == r.height
        assert r.depth == r.krull_dim == tree.n - r.certificate.m
    else:
        assert r.cohen_macaulay or (r.depth is None and r.proj_dim is None)


@settings(max_examples=200)
@given(tree_and_t(max_n=11))
def test_certificate_is_konig_matching(case):
    tree, t = case
    cert = t_partition(tree, t)
    if cert is None:
        return
    cx = path_complex(tree, t)
    assert cert.m == cx.covering_number()
    assert frozenset().union(*map(frozenset, cert.facets)) == cx.vertices
    assert sum(map(len, cert.facets)) == len(cx.vertices)
    free = cx.free_vertices()
    assert all(free & set(f) for f in cert.facets)


@given(trees(min_n=2, max_n=10))
def test_edge_ideal_ignores_root(tree):
    verdicts = {classify(tree.rerooted(r), 2).unmixed for r in tree.vertices}
    assert len(verdicts) == 1


def test_deg_two_disagrees_with_unmixed():
    assert not path_complex(DEG_TWO, 3).is_unmixed_by_covers()
    assert t_partition(DEG_TWO, 3).deg_per_facet == (2, 0, 0)
