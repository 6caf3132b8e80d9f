"""Simplicial complexes and clutters given by their facets.

Faces are frozensets of positive integer vertices.  Most of the
combinatorial searches below run on Python-int bitmasks (bit ``v`` set for
vertex ``v``).  Exhaustive operations are guarded and raise
:class:`GuardError` instead of truncating.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Iterator

__all__ = [
    "GuardError",
    "SimplicialComplex",
    "from_facets",
    "MAX_ENUM_VERTICES",
    "MAX_ENUM_FACETS",
    "MAX_CYCLE_VERTICES",
    "MAX_CYCLE_FACETS",
]

MAX_ENUM_VERTICES = 24
MAX_ENUM_FACETS = 20
MAX_CYCLE_VERTICES = 16
MAX_CYCLE_FACETS = 12

Face = frozenset[int]


class GuardError(RuntimeError):
    """An exhaustive computation was asked to run beyond its size bound."""


def to_mask(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def from_mask(m: int) -> Face:
    out = []
    v = 0
    while m:
        if m & 1:
            out.append(v)
        m >>= 1
        v += 1
    return frozenset(out)


def _bits(m: int) -> list[int]:
    return sorted(from_mask(m))


def _order(face: Iterable[int]) -> tuple:
    s = sorted(face)
    return (len(s), s)


def _antichain(sets: Iterable[Face]) -> list[Face]:
    uniq = sorted(set(map(frozenset, sets)), key=len, reverse=True)
    kept: list[Face] = []
    for s in uniq:
        if not any(s <= k for k in kept):
            kept.append(s)
    return sorted(kept, key=_order)


class SimplicialComplex:
    """A simplicial complex stored as its facets.

    The *void* complex has no faces at all; it is what ``from_facets([])``
    returns.  The complex ``{∅}`` whose only face is the empty set is a
    different object: ``from_facets([frozenset()])``.
    """

    __slots__ = ("facets", "vertices", "_masks")

    def __init__(self, facets: Iterable[Iterable[int]]):
        self.facets: tuple[Face, ...] = tuple(_antichain(facets))
        self.vertices: Face = frozenset().union(*self.facets)
        self._masks = tuple(to_mask(f) for f in self.facets)

    # -- basic structure ---------------------------------------------------

    @property
    def is_void(self) -> bool:
        return not self.facets

    def dimension(self) -> int:
        """Largest facet size minus one; -1 for the void complex and ``{∅}``."""
        if self.is_void:
            return -1
        return max(len(f) for f in self.facets) - 1

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def __contains__(self, face: Iterable[int]) -> bool:
        m = to_mask(face)
        return any(m & fm == m for fm in self._masks)

    def is_face(self, face: Iterable[int]) -> bool:
        return face in self

    def faces(self) -> Iterator[Face]:
        """Every face exactly once, grouped by increasing size."""
        self._guard_vertices()
        seen: set[int] = set()
        for fm in self._masks:
            sub = fm
            while True:
                seen.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & fm
        for m in sorted(seen, key=lambda m: (m.bit_count(), _bits(m))):
            yield from_mask(m)

    def f_vector(self) -> tuple[int, ...]:
        """``(f_0, ..., f_{d-1})``; ``f_{-1} = 1`` is left implicit."""
        counts = [0] * (self.dimension() + 1)
        for face in self.faces():
            if face:
                counts[len(face) - 1] += 1
        return tuple(counts)

    def reduced_euler_characteristic(self) -> int:
        """``-1 + sum_i (-1)^i f_i``.  The void complex, having no empty face, gives 0."""
        if self.is_void:
            return 0
        return -1 + sum((-1) ** i * f for i, f in enumerate(self.f_vector()))

    # -- local structure ---------------------------------------------------

    def _require_face(self, face: Iterable[int]) -> Face:
        face = frozenset(face)
        if face not in self:
            raise ValueError(f"{sorted(face)} is not a face of the complex")
        return face

    def star(self, face: Iterable[int]) -> SimplicialComplex:
        g = self._require_face(face)
        return SimplicialComplex(f for f in self.facets if g <= f)

    def link(self, face: Iterable[int]) -> SimplicialComplex:
        g = self._require_face(face)
        return SimplicialComplex(f - g for f in self.facets if g <= f)

    def restriction(self, vertices: Iterable[int]) -> SimplicialComplex:
        """Induced subcomplex on ``vertices``."""
        w = frozenset(vertices)
        if self.is_void:
            return self
        return SimplicialComplex(f & w for f in self.facets)

    def core(self) -> SimplicialComplex:
        """Restriction to the vertices whose star is not the whole complex.

        A vertex has full star exactly when it lies in every facet.
        """
        if self.is_void:
            return self
        cone = frozenset.intersection(*self.facets)
        return self.restriction(self.vertices - cone)

    def free_vertices(self) -> Face:
        """Vertices lying in exactly one facet."""
        count: dict[int, int] = {}
        for f in self.facets:
            for v in f:
                count[v] = count.get(v, 0) + 1
        return frozenset(v for v, c in count.items() if c == 1)

    # -- leaves and forests ------------------------------------------------

    def is_leaf_facet(self, facet: Iterable[int]) -> bool:
        facet = frozenset(facet)
        if facet not in self.facets:
            raise ValueError(f"{sorted(facet)} is not a facet")
        i = self.facets.index(facet)
        return _is_leaf(i, (1 << len(self.facets)) - 1, self._intersections())

    def _intersections(self) -> list[list[int]]:
        ms = self._masks
        return [[a & b for b in ms] for a in ms]

    def is_simplicial_forest(self) -> bool:
        """Every nonempty subfamily of facets contains a leaf.

        Checked over all ``2^q - 1`` subfamilies, so ``q`` is bounded by
        ``MAX_ENUM_FACETS``.
        """
        q = len(self.facets)
        if q > MAX_ENUM_FACETS:
            raise GuardError(f"forest check limited to {MAX_ENUM_FACETS} facets, got {q}")
        inter = self._intersections()
        for sub in range(1, 1 << q):
            if not any(_is_leaf(i, sub, inter) for i in _members(sub)):
                return False
        return True

    def is_connected(self) -> bool:
        if len(self.facets) <= 1:
            return True
        reach = self._masks[0]
        pending = list(self._masks[1:])
        grew = True
        while grew:
            grew = False
            for m in list(pending):
                if m & reach:
                    reach |= m
                    pending.remove(m)
                    grew = True
        return not pending

    def is_simplicial_tree(self) -> bool:
        return self.is_connected() and self.is_simplicial_forest()

    # -- covers and matchings ------------------------------------------------

    def _guard_vertices(self) -> None:
        if len(self.vertices) > MAX_ENUM_VERTICES:
            raise GuardError(
                f"enumeration limited to {MAX_ENUM_VERTICES} vertices, got {len(self.vertices)}")

    def _guard_facets(self) -> None:
        if len(self.facets) > MAX_ENUM_FACETS:
            raise GuardError(
                f"enumeration limited to {MAX_ENUM_FACETS} facets, got {len(self.facets)}")

    def minimal_vertex_covers(self) -> list[Face]:
        """All inclusion-minimal transversals of the facets.

        Branches on the vertices of the first uncovered facet and prunes a
        partial cover as soon as one of its vertices has no private facet
        (private facets only disappear as the cover grows).
        """
        self._guard_vertices()
        masks = self._masks
        found: set[int] = set()

        def private_ok(cover: int) -> bool:
            v_bits = cover
            while v_bits:
                low = v_bits & -v_bits
                if not any(fm & cover == low for fm in masks):
                    return False
                v_bits ^= low
            return True

        def grow(cover: int) -> None:
            for fm in masks:
                if not fm & cover:
                    break
            else:
                found.add(cover)
                return
            bits = fm
            while bits:
                low = bits & -bits
                bits ^= low
                nxt = cover | low
                if private_ok(nxt):
                    grow(nxt)

        grow(0)
        return sorted((from_mask(m) for m in found), key=_order)

    def covering_number(self) -> int:
        """Minimum size of a vertex cover (branch and bound, no enumeration guard)."""
        masks = self._masks
        best = len(self.vertices)

        def search(cover: int, size: int) -> None:
            nonlocal best
            if size >= best:
                return
            for fm in masks:
                if not fm & cover:
                    break
            else:
                best = size
                return
            bits = fm
            while bits:
                low = bits & -bits
                bits ^= low
                search(cover | low, size + 1)

        search(0, 0)
        return best

    def is_unmixed_by_covers(self) -> bool:
        return len({len(c) for c in self.minimal_vertex_covers()}) <= 1

    def max_disjoint_facets(self) -> int:
        """Size of a largest family of pairwise disjoint facets."""
        self._guard_facets()
        masks = self._masks
        best = 0

        def search(start: int, used: int, size: int) -> None:
            nonlocal best
            best = max(best, size)
            if size + len(masks) - start <= best:
                return
            for i in range(start, len(masks)):
                if not masks[i] & used:
                    search(i + 1, used | masks[i], size + 1)

        search(0, 0, 0)
        return best

    def has_konig_property(self) -> bool:
        return self.max_disjoint_facets() == self.covering_number()

    def exact_covers(self) -> list[tuple[Face, ...]]:
        """Families of pairwise disjoint facets whose union is the vertex set."""
        self._guard_facets()
        masks = self._masks
        full = to_mask(self.vertices)
        out: list[tuple[int, ...]] = []

        def search(covered: int, chosen: list[int]) -> None:
            if covered == full:
                out.append(tuple(chosen))
                return
            low = (full & ~covered) & -(full & ~covered)
            for i, fm in enumerate(masks):
                if fm & low and not fm & covered:
                    chosen.append(i)
                    search(covered | fm, chosen)
                    chosen.pop()

        search(0, [])
        families = [tuple(self.facets[i] for i in sorted(c)) for c in out]
        return sorted(families, key=lambda fam: [_order(f) for f in fam])

    def perfect_matchings_konig_type(self) -> list[tuple[Face, ...]]:
        """Exact covers by facets whose size equals the covering number."""
        g = self.covering_number()
        return [fam for fam in self.exact_covers() if len(fam) == g]

    # -- clutter cycles ------------------------------------------------------

    def has_clutter_cycle(self, r_max: int | None = None) -> bool:
        return self.find_clutter_cycle(r_max) is not None

    def find_clutter_cycle(self, r_max: int | None = None):
        """Search for a cycle of length ``3 <= r <= r_max`` in the clutter.

        A cycle is a square incidence submatrix of order ``r`` with exactly
        two ones per row and column that is a single cycle, i.e. vertices
        ``x_1..x_r`` and facets ``E_1..E_r`` with ``x_i`` in ``E_i`` and
        ``E_{i+1}`` (indices mod ``r``) and in no other chosen facet.
        Returns ``(vertices, facets)`` or None.
        """
        nv, q = len(self.vertices), len(self.facets)
        if nv > MAX_CYCLE_VERTICES or q > MAX_CYCLE_FACETS:
            raise GuardError(
                f"cycle search limited to {MAX_CYCLE_VERTICES} vertices and "
                f"{MAX_CYCLE_FACETS} facets, got {nv} and {q}")
        cap = min(nv, q)
        r_max = cap if r_max is None else min(r_max, cap)
        if r_max < 3:
            return None
        masks = self._masks

        def extend(es: list[int], xs: list[int], xmask: int):
            # es = [E_1..E_k], xs = [x_1..x_{k-1}]
            k = len(es)
            first, last = masks[es[0]], masks[es[-1]]
            middle = 0
            for e in es[1:-1]:
                middle |= masks[e]
            cand = last & ~xmask & ~middle
            while cand:
                low = cand & -cand
                cand ^= low
                if k > 1 and low & first:
                    if k >= 3:
                        return es, xs + [low]
                    continue
                if k == r_max:
                    continue
                for j in range(es[0] + 1, q):
                    fm = masks[j]
                    if j in es or not fm & low or fm & xmask:
                        continue
                    hit = extend(es + [j], xs + [low], xmask | low)
                    if hit:
                        return hit
            return None

        for s in range(q):
            hit = extend([s], [], 0)
            if hit:
                es, xs = hit
                return ([x.bit_length() - 1 for x in xs], [self.facets[e] for e in es])
        return None

    # -- misc ----------------------------------------------------------------

    def to_dict(self) -> dict:
        return {"vertices": sorted(self.vertices),
                "facets": [sorted(f) for f in self.facets]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> SimplicialComplex:
        return cls(data["facets"])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.facets == other.facets

    def __hash__(self) -> int:
        return hash(self.facets)

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, sorted(f))) + "}" for f in self.facets)
        return f"<{body}>"


def from_facets(candidates: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Build a complex, dropping duplicates and non-maximal candidates."""
    return SimplicialComplex(candidates)


def _members(sub: int) -> Iterator[int]:
    i = 0
    while sub:
        if sub & 1:
            yield i
        sub >>= 1
        i += 1


def _is_leaf(i: int, sub: int, inter: list[list[int]]) -> bool:
    """Is facet ``i`` a leaf of the subfamily ``sub`` (a bitmask of facet indices)?

    Some other facet ``G`` must contain every ``F_i ∩ F'``; equivalently it
    must contain their union.
    """
    rest = sub & ~(1 << i)
    if not rest:
        return True
    row = inter[i]
    union = 0
    for j in _members(rest):
        union |= row[j]
    return any(row[j] & union == union for j in _members(rest))
