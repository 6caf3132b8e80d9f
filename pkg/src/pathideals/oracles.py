"""Brute-force verifiers that re-derive each verdict without the classifier.

Every oracle returns an :class:`OracleVerdict`; a negative verdict carries a
witness that can be checked by hand.  :func:`cross_validate` runs all of
them against :func:`pathideals.classify.classify` over a corpus.
"""

from __future__ import annotations

import json
from collections.abc import Iterable
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .classify import classify, clean
from .complexes import GuardError, SimplicialComplex
from .ideal import SquarefreeMonomialIdeal, face_table, path_complex, path_ideal
from .tree import RootedTree

__all__ = [
    "OracleVerdict",
    "unmixed_oracle",
    "konig_unmixed_oracle",
    "matroid_oracle",
    "stanley_gorenstein_oracle",
    "ci_oracle",
    "cross_validate",
    "CrossValidation",
    "sweep",
    "MAX_ORACLE_N",
    "MAX_SR_N",
]

MAX_ORACLE_N = 24
MAX_SR_N = 18


@dataclass
class OracleVerdict:
    name: str
    verdict: bool
    witness: dict | None = None

    def __bool__(self) -> bool:
        return self.verdict

    def to_dict(self) -> dict:
        return {"name": self.name, "verdict": self.verdict, "witness": self.witness}


def _guard(n: int, bound: int, what: str) -> None:
    if n > bound:
        raise GuardError(f"{what} limited to n <= {bound}, got n = {n}")


def unmixed_oracle(tree: RootedTree, t: int) -> OracleVerdict:
    """All minimal vertex covers of the path facet complex have one size."""
    _guard(tree.n, MAX_ORACLE_N, "unmixed oracle")
    covers = path_complex(tree, t).minimal_vertex_covers()
    small = min(covers, key=lambda c: (len(c), sorted(c)))
    # among the largest covers, the one sharing least with the smallest
    big = min(covers, key=lambda c: (-len(c), len(c & small), sorted(c)))
    if len(small) == len(big):
        return OracleVerdict("unmixed", True)
    return OracleVerdict("unmixed", False, {"covers": [sorted(small), sorted(big)]})


def _nested(a: frozenset, b: frozenset) -> bool:
    return a <= b or b <= a


def _matching_failure(cx: SimplicialComplex, matching) -> dict | None:
    free = cx.free_vertices()
    for e in matching:
        if not e & free:
            return {"matching": [sorted(f) for f in matching],
                    "no_free_vertex": sorted(e)}
    for e in matching:
        for a, b in combinations(cx.facets, 2):
            if not _nested(a & e, b & e):
                return {"matching": [sorted(f) for f in matching],
                        "edge": sorted(e), "pair": [sorted(a), sorted(b)]}
    return None


def konig_unmixed_oracle(tree: RootedTree, t: int) -> OracleVerdict:
    """Unmixedness via perfect matchings of Konig type.

    For a totally balanced clutter with the Konig property, unmixed means
    some perfect matching of Konig type has a free vertex in every edge and
    cuts every pair of edges in nested sets.  "Nested" allows equality.
    """
    _guard(tree.n, MAX_ORACLE_N, "Konig oracle")
    cx = path_complex(tree, t)
    matchings = cx.perfect_matchings_konig_type()
    if not matchings:
        return OracleVerdict("konig_unmixed", False, {"reason": "no perfect matching of Konig type"})
    first = None
    for m in matchings:
        failure = _matching_failure(cx, m)
        if failure is None:
            return OracleVerdict("konig_unmixed", True, {"matching": [sorted(f) for f in m]})
        first = first or failure
    return OracleVerdict("konig_unmixed", False, first)


def _popcount(a: np.ndarray) -> np.ndarray:
    a = a.astype(np.uint64)
    out = np.zeros(a.shape, dtype=np.int64)
    while a.any():
        out += (a & np.uint64(1)).astype(np.int64)
        a = a >> np.uint64(1)
    return out


def _set(mask: int) -> list[int]:
    return [i + 1 for i in range(mask.bit_length()) if mask >> i & 1]


def matroid_oracle(ideal: SquarefreeMonomialIdeal) -> OracleVerdict:
    """Exchange axiom on the Stanley-Reisner complex, over all face pairs.

    For each face ``G`` let ``ext(G)`` be the vertices ``x`` with
    ``G + x`` a face.  A pair ``(F, G)`` with ``|F| > |G|`` violates the
    axiom exactly when ``F`` avoids ``ext(G)``, so it suffices to know the
    largest face inside the complement of ``ext(G)``.  That maximum is
    tabulated for every vertex subset with a subset-max transform.
    """
    n = ideal.n
    _guard(n, MAX_SR_N, "matroid oracle")
    ok = face_table(ideal)
    size = 1 << n
    masks = np.arange(size, dtype=np.int64)
    pop = _popcount(masks)

    ext = np.zeros(size, dtype=np.int64)
    for i in range(n):
        bit = 1 << i
        free = (masks & bit) == 0
        ext |= np.where(free & ok[masks | bit], bit, 0)

    best = np.where(ok, pop, -1)
    for i in range(n):
        view = best.reshape(-1, 2, 1 << i)
        np.maximum(view[:, 1, :], view[:, 0, :], out=view[:, 1, :])

    full = size - 1
    room = best[full & ~ext]
    bad = np.flatnonzero(ok & (room > pop))
    if bad.size == 0:
        return OracleVerdict("matroid", True)
    g = int(bad[0])
    allowed = full & ~int(ext[g])
    k = int(pop[g]) + 1
    f = next(int(m) for m in np.flatnonzero(ok & (pop == k))
             if int(m) & ~allowed == 0)
    return OracleVerdict("matroid", False, {"F": _set(f), "G": _set(g)})


def _classify_link(vertices: list[int], edges: list[tuple[int, int]]) -> str | None:
    """Name of the 1-dimensional link shape, or None if it is none of the allowed ones."""
    touched = {v for e in edges for v in e}
    if set(vertices) - touched:
        return None
    if len(edges) == 1:
        return "edge"
    deg: dict[int, int] = {}
    for a, b in edges:
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    if len(edges) == 2 and len(vertices) == 3:
        return "path"
    if len(vertices) >= 3 and all(d == 2 for d in deg.values()) and len(edges) == len(vertices):
        # connected 2-regular graph
        adj = {v: [] for v in vertices}
        for a, b in edges:
            adj[a].append(b)
            adj[b].append(a)
        seen, stack = {vertices[0]}, [vertices[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) == len(vertices):
            return "circle"
    return None


def stanley_gorenstein_oracle(ideal: SquarefreeMonomialIdeal, tree: RootedTree,
                              t: int) -> OracleVerdict:
    """Gorenstein test on the Stanley-Reisner complex via links and the core.

    Gorenstein iff the complex is ``{∅}``, a point or two points, or it is
    Cohen-Macaulay of dimension ``d - 1 >= 1``, every face with ``d - 2``
    vertices has as link a circle, an edge or a two-edge path, and the core
    has reduced Euler characteristic ``(-1)^dim``.  Cohen-Macaulayness is
    taken from :func:`unmixed_oracle`, which is equivalent for path ideals
    of trees.
    """
    n = ideal.n
    _guard(n, MAX_SR_N, "Stanley oracle")
    name = "stanley_gorenstein"
    ok = face_table(ideal)
    size = 1 << n
    pop = _popcount(np.arange(size, dtype=np.int64))
    d = int(pop[ok].max())

    if d == 0 or (d == 1 and n <= 2):
        return OracleVerdict(name, True, {"case": "small", "vertices": n})
    if d == 1:
        return OracleVerdict(name, False, {"reason": f"{n} isolated vertices"})

    cm = unmixed_oracle(tree, t)
    if not cm.verdict:
        return OracleVerdict(name, False, {"reason": "not Cohen-Macaulay", "covers": cm.witness["covers"]})

    for h in np.flatnonzero(ok & (pop == d - 2)):
        h = int(h)
        xs = [i for i in range(n) if not h >> i & 1 and ok[h | 1 << i]]
        edges = [(a, b) for a, b in combinations(xs, 2) if ok[h | 1 << a | 1 << b]]
        if _classify_link(xs, edges) is None:
            return OracleVerdict(name, False, {
                "face": _set(h),
                "link_vertices": [x + 1 for x in xs],
                "link_edges": [[a + 1, b + 1] for a, b in edges]})

    facets = [frozenset(_set(int(m))) for m in np.flatnonzero(ok & (pop == d))]
    cone = frozenset.intersection(*facets)
    core_vertices = [v for v in range(1, n + 1) if v not in cone]
    core_mask = sum(1 << (v - 1) for v in core_vertices)
    in_core = ok & ((np.arange(size, dtype=np.int64) & ~core_mask) == 0)
    core_pop = pop[in_core]
    chi = int(np.sum(np.where(core_pop % 2 == 1, 1, -1)))
    dim_core = int(core_pop.max()) - 1
    expected = (-1) ** dim_core if dim_core >= 0 else -1
    if chi != expected:
        return OracleVerdict(name, False, {"reason": "Euler characteristic of the core",
                                           "chi": chi, "dim_core": dim_core})
    return OracleVerdict(name, True)


def ci_oracle(ideal: SquarefreeMonomialIdeal) -> OracleVerdict:
    for a, b in combinations(ideal.generators, 2):
        if a & b:
            return OracleVerdict("ci", False, {"overlap": [sorted(a), sorted(b)]})
    return OracleVerdict("ci", True)


# -- batch cross-validation ----------------------------------------------------

def sweep(trees: Iterable[RootedTree]) -> list[tuple[RootedTree, int]]:
    """Every ``(tree, t)`` with ``2 <= t <= n``."""
    return [(tree, t) for tree in trees for t in range(2, tree.n + 1)]


@dataclass
class CrossValidation:
    instances: int = 0
    agreements: int = 0
    cm_count: int = 0
    gorenstein_count: int = 0
    records: list[dict] = field(default_factory=list)
    divergences: list[dict] = field(default_factory=list)
    guard_breaches: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.divergences

    def summary(self) -> dict:
        return {"instances": self.instances, "agreements": self.agreements,
                "cm": self.cm_count, "gorenstein": self.gorenstein_count,
                "divergences": len(self.divergences),
                "guard_breaches": len(self.guard_breaches)}

    def jsonl(self) -> str:
        return "".join(json.dumps(r, sort_keys=True) + "\n" for r in self.records)


def check_instance(tree: RootedTree, t: int) -> dict:
    """Run the classifier and every oracle on one instance.

    Raises :class:`GuardError` if an oracle refuses the size.
    """
    report = classify(tree, t)
    ideal = path_ideal(tree, t)
    ctree, _ = clean(tree, t)
    verdicts = [
        unmixed_oracle(tree, t),
        konig_unmixed_oracle(tree, t),
        matroid_oracle(ideal),
        stanley_gorenstein_oracle(ideal, tree, t),
        ci_oracle(ideal),
    ]
    by_name = {v.name: v for v in verdicts}
    line_t = report.zero_ideal or (ctree.is_line() and ctree.n == t)
    mismatches = []
    for key in ("unmixed", "konig_unmixed"):
        if by_name[key].verdict != report.unmixed:
            mismatches.append(key)
    for key in ("matroid", "stanley_gorenstein", "ci"):
        if by_name[key].verdict != report.gorenstein:
            mismatches.append(key)
    if line_t != report.gorenstein:
        mismatches.append("clean_form_is_line")
    return {
        "tree": tree.to_dict(), "t": t,
        "classify": {k: report.to_dict()[k] for k in
                     ("zero_ideal", "fitting", "unmixed", "cohen_macaulay", "gorenstein",
                      "height", "proj_dim")},
        "oracles": {v.name: v.to_dict() for v in verdicts},
        "mismatches": mismatches,
    }


def cross_validate(corpus: Iterable[tuple[RootedTree, int]]) -> CrossValidation:
    """Check classifier/oracle agreement on every instance; never stops early."""
    out = CrossValidation()
    for tree, t in corpus:
        out.instances += 1
        try:
            rec = check_instance(tree, t)
        except GuardError as exc:
            rec = {"tree": tree.to_dict(), "t": t, "guard": str(exc)}
            out.guard_breaches.append(rec)
            out.records.append(rec)
            continue
        out.records.append(rec)
        if rec["mismatches"]:
            out.divergences.append(rec)
        else:
            out.agreements += 1
        out.cm_count += rec["classify"]["cohen_macaulay"]
        out.gorenstein_count += rec["classify"]["gorenstein"]
    return out
