"""Combinatorial classification of path ideals of rooted trees.

The pipeline is: clean the tree (drop shallow leaves that lie on no path
with ``t`` vertices), pick the leaf facets, test whether they partition the
vertex set, collect the branches hanging off the partition, and apply the
two *fitting* conditions.  Unmixedness, Cohen-Macaulayness and Serre's
``S_r`` (r >= 2) all coincide with being fitting.  Gorenstein, complete
intersection, matroid and "every power CM" all coincide with the clean
form being a chain of exactly ``t`` vertices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .ideal import ideal_height, path_ideal
from .tree import Path, RootedTree

__all__ = [
    "TBranch",
    "TPartitionCertificate",
    "ClassificationReport",
    "clean",
    "leaf_facet_candidates",
    "t_partition",
    "t_branches",
    "is_fitting",
    "is_line",
    "classify",
]


@dataclass(frozen=True)
class TBranch:
    """A path with ``t + 1`` vertices meeting one partition facet only in its first vertex.

    ``attach_facet`` is a 0-based index into the certificate's facets.
    """

    path: Path
    attach_facet: int
    attach_vertex: int
    initial: bool
    level: int

    def to_dict(self) -> dict:
        return {"path": list(self.path), "attach_facet": self.attach_facet,
                "attach_vertex": self.attach_vertex, "initial": self.initial,
                "level": self.level}


@dataclass(frozen=True)
class TPartitionCertificate:
    facets: tuple[Path, ...]
    branches: tuple[TBranch, ...]
    deg_per_facet: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.facets)

    @property
    def deg_gamma(self) -> int:
        return max(self.deg_per_facet, default=0)

    def to_dict(self) -> dict:
        return {"facets": [list(f) for f in self.facets], "m": self.m,
                "branches": [b.to_dict() for b in self.branches],
                "deg_per_facet": list(self.deg_per_facet),
                "deg_gamma": self.deg_gamma}


@dataclass
class ClassificationReport:
    n: int
    t: int
    zero_ideal: bool
    clean_removed: frozenset[int]
    partitioned: bool
    fitting: bool
    certificate: TPartitionCertificate | None
    failure_witness: str | None
    unmixed: bool
    cohen_macaulay: bool
    serre_sr: bool
    gorenstein: bool
    complete_intersection: bool
    matroid: bool
    all_powers_cm: bool
    height: int
    krull_dim: int
    depth: int | None = None
    proj_dim: int | None = None
    generators: list[list[int]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "n": self.n, "t": self.t, "zero_ideal": self.zero_ideal,
            "clean_removed": sorted(self.clean_removed),
            "partitioned": self.partitioned, "fitting": self.fitting,
            "unmixed": self.unmixed, "cohen_macaulay": self.cohen_macaulay,
            "serre_sr": self.serre_sr, "gorenstein": self.gorenstein,
            "complete_intersection": self.complete_intersection,
            "matroid": self.matroid, "all_powers_cm": self.all_powers_cm,
            "height": self.height, "krull_dim": self.krull_dim,
            "depth": self.depth, "proj_dim": self.proj_dim,
            "generators": self.generators,
            "certificate": self.certificate.to_dict() if self.certificate else None,
            "failure_witness": self.failure_witness,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def _check_t(tree: RootedTree, t: int) -> None:
    if not 2 <= t <= tree.n:
        raise ValueError(f"t must satisfy 2 <= t <= n={tree.n}, got t={t}")


def is_line(tree: RootedTree) -> bool:
    return tree.is_line()


def clean(tree: RootedTree, t: int) -> tuple[RootedTree, frozenset[int]]:
    """Repeatedly delete leaves at level < t - 1; the root is never deleted.

    Returns the clean form and the removed vertices.  A deleted non-root
    leaf lies on no path with ``t`` vertices, so the generators of ``I_t``
    are unchanged.
    """
    _check_t(tree, t)
    removed: set[int] = set()
    alive_children = {v: len(tree.children(v)) for v in tree.vertices}
    queue = [v for v in tree.vertices
             if v != tree.root and alive_children[v] == 0 and tree.level(v) < t - 1]
    while queue:
        v = queue.pop()
        removed.add(v)
        p = tree.parent(v)
        alive_children[p] -= 1
        if p != tree.root and alive_children[p] == 0 and tree.level(p) < t - 1:
            queue.append(p)
    return tree.without(removed), frozenset(removed)


def leaf_facet_candidates(clean_tree: RootedTree, t: int) -> list[list[Path]]:
    """Candidate lists ``F_1..F_m`` of leaf facets.

    Each non-root leaf sits on exactly one path with ``t`` vertices (the one
    ending there); those paths are mandatory.  If the root is a leaf that no
    mandatory path reaches, every path starting at the root is tried as the
    extra member, giving one candidate per choice.  An empty list means some
    leaf lies on no such path.
    """
    root = clean_tree.root
    mandatory: list[Path] = []
    for leaf in sorted(clean_tree.leaves()):
        if leaf == root:
            continue
        p = clean_tree.ancestors(leaf, t)
        if p is None:
            return []
        if p not in mandatory:
            mandatory.append(p)
    mandatory.sort()
    if root not in clean_tree.leaves() or any(p[0] == root for p in mandatory):
        return [mandatory] if mandatory else []
    from_root = [p for p in clean_tree.paths(t) if p[0] == root]
    return [sorted(mandatory + [p]) for p in from_root]


def _is_partition(facets: list[Path], vertices: frozenset[int]) -> bool:
    seen: set[int] = set()
    for f in facets:
        if seen.intersection(f):
            return False
        seen.update(f)
    return seen == vertices


def t_branches(clean_tree: RootedTree, t: int, facets) -> list[TBranch]:
    """Branches of a partition: paths with ``t + 1`` vertices whose first
    vertex ``x`` lies in some ``F_i`` and which meet ``F_i`` only in ``x``."""
    owner: dict[int, int] = {}
    for i, f in enumerate(facets):
        for v in f:
            owner[v] = i
    out = []
    for p in clean_tree.paths(t + 1):
        x = p[0]
        i = owner.get(x)
        if i is None or set(p) & set(facets[i]) != {x}:
            continue
        out.append(TBranch(p, i, x, x == facets[i][0], clean_tree.level(x)))
    return out


def _certificate(clean_tree: RootedTree, t: int, facets: list[Path]) -> TPartitionCertificate:
    branches = t_branches(clean_tree, t, facets)
    attach = [set() for _ in facets]
    for b in branches:
        attach[b.attach_facet].add(b.attach_vertex)
    return TPartitionCertificate(tuple(facets), tuple(branches), tuple(len(a) for a in attach))


def _partition_or_reason(tree: RootedTree, t: int):
    """(clean tree, removed, certificate or None, reason or None)."""
    ctree, removed = clean(tree, t)
    paths = ctree.paths(t)
    if not paths:
        return ctree, removed, None, "zero ideal: no path with t vertices"
    vertices = frozenset().union(*map(frozenset, paths))
    candidates = leaf_facet_candidates(ctree, t)
    if not candidates:
        return ctree, removed, None, "some leaf of the clean form lies on no path with t vertices"
    for facets in candidates:
        if _is_partition(facets, vertices):
            return ctree, removed, _certificate(ctree, t, facets), None
    facets = candidates[0]
    counts: dict[int, int] = {}
    for f in facets:
        for v in f:
            counts[v] = counts.get(v, 0) + 1
    shared = sorted(v for v, c in counts.items() if c > 1)
    missed = sorted(vertices - set(counts))
    reason = f"not {t}-partitioned by leaf facets {[list(f) for f in facets]}"
    if shared:
        reason += f"; shared vertices {shared}"
    if missed:
        reason += f"; uncovered vertices {missed}"
    if len(candidates) > 1:
        reason += f" (and {len(candidates) - 1} other root choices)"
    return ctree, removed, None, reason


def t_partition(tree: RootedTree, t: int) -> TPartitionCertificate | None:
    """Certificate for the partition by leaf facets, or None.

    At most one candidate can succeed: the non-root leaf facets are forced,
    and a partition fixes the root facet as the set of leftover vertices.
    """
    _check_t(tree, t)
    return _partition_or_reason(tree, t)[2]


def _fitting_failure(cert: TPartitionCertificate, t: int) -> str | None:
    for i, d in enumerate(cert.deg_per_facet):
        if d > 1:
            xs = sorted({b.attach_vertex for b in cert.branches if b.attach_facet == i})
            return (f"Deg(F_{i + 1}) = {d} > 1: facet {list(cert.facets[i])} "
                    f"has branches starting at {xs}")
    for b in cert.branches:
        if not b.initial and b.level > t - 1:
            return (f"non-initial branch {list(b.path)} at level {b.level} > t-1 = {t - 1}")
    return None


def is_fitting(tree: RootedTree, t: int) -> tuple[bool, str | None]:
    """Fitting test with a witness naming the first violated condition.

    The zero ideal counts as (vacuously) fitting, matching the convention
    that it is unmixed.
    """
    _check_t(tree, t)
    ctree, _, cert, reason = _partition_or_reason(tree, t)
    if cert is None:
        if not ctree.paths(t):
            return True, None
        return False, reason
    failure = _fitting_failure(cert, t)
    return failure is None, failure


def classify(tree: RootedTree, t: int) -> ClassificationReport:
    """Fill every verdict from the combinatorial characterizations."""
    _check_t(tree, t)
    ideal = path_ideal(tree, t)
    n = tree.n
    ctree, removed, cert, reason = _partition_or_reason(tree, t)
    gens = [sorted(g) for g in ideal.generators]

    if ideal.is_zero:
        return ClassificationReport(
            n=n, t=t, zero_ideal=True, clean_removed=removed, partitioned=False,
            fitting=True, certificate=None, failure_witness=None,
            unmixed=True, cohen_macaulay=True, serre_sr=True, gorenstein=True,
            complete_intersection=True, matroid=True, all_powers_cm=True,
            height=0, krull_dim=n, depth=n, proj_dim=0, generators=gens)

    fitting = cert is not None and _fitting_failure(cert, t) is None
    witness = reason if cert is None else _fitting_failure(cert, t)
    line_t = ctree.is_line() and ctree.n == t
    height = ideal_height(ideal)
    report = ClassificationReport(
        n=n, t=t, zero_ideal=False, clean_removed=removed,
        partitioned=cert is not None, fitting=fitting, certificate=cert,
        failure_witness=witness,
        unmixed=fitting, cohen_macaulay=fitting, serre_sr=fitting,
        gorenstein=line_t, complete_intersection=line_t, matroid=line_t,
        all_powers_cm=line_t, height=height, krull_dim=n - height, generators=gens)
    if fitting:
        report.depth = n - cert.m
        report.proj_dim = cert.m
    return report

