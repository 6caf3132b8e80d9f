"""Path ideals of rooted trees and their two simplicial complexes.

``I_t(T)`` is generated by the monomials ``x_{i_1} ... x_{i_t}`` over the
directed paths with ``t`` vertices.  Its *facet complex* has those vertex
sets as facets; its *Stanley-Reisner complex* on ``[n]`` has as faces the
sets containing no generator support.
"""

from __future__ import annotations

import json
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from .complexes import MAX_ENUM_VERTICES, GuardError, SimplicialComplex, from_mask
from .tree import RootedTree

__all__ = [
    "SquarefreeMonomialIdeal",
    "path_ideal",
    "path_complex",
    "stanley_reisner_face",
    "stanley_reisner_complex",
    "face_table",
    "ideal_height",
    "is_complete_intersection",
]


@dataclass(frozen=True)
class SquarefreeMonomialIdeal:
    """Squarefree monomial ideal in ``k[x_1..x_n]`` given by generator supports."""

    n: int
    generators: tuple[frozenset[int], ...]

    def __post_init__(self):
        gens = [frozenset(g) for g in self.generators]
        for g in gens:
            if not g:
                raise ValueError("the unit ideal is not squarefree-monomial here")
            if min(g) < 1 or max(g) > self.n:
                raise ValueError(f"generator {sorted(g)} uses variables outside 1..{self.n}")
        for a in gens:
            for b in gens:
                if a < b:
                    raise ValueError(f"generator {sorted(b)} is not minimal")
        ordered = tuple(sorted(set(gens), key=lambda g: sorted(g)))
        object.__setattr__(self, "generators", ordered)

    @classmethod
    def from_dict(cls, data: dict) -> SquarefreeMonomialIdeal:
        return cls(data["n"], tuple(frozenset(g) for g in data["generators"]))

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def facet_complex(self) -> SimplicialComplex:
        return SimplicialComplex(self.generators)

    def to_dict(self) -> dict:
        return {"n": self.n, "generators": [sorted(g) for g in self.generators]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def monomials(self) -> list[str]:
        return ["*".join(f"x{i}" for i in sorted(g)) for g in self.generators]

    def __str__(self) -> str:
        return "(" + ", ".join(self.monomials()) + ")" if self.generators else "(0)"


def _check_t(tree: RootedTree, t: int) -> None:
    if not 2 <= t <= tree.n:
        raise ValueError(f"t must satisfy 2 <= t <= n={tree.n}, got t={t}")


def path_ideal(tree: RootedTree, t: int) -> SquarefreeMonomialIdeal:
    """``I_t`` of the tree; the ambient ring has one variable per label up to the largest."""
    _check_t(tree, t)
    return SquarefreeMonomialIdeal(max(tree.vertices),
                                   tuple(frozenset(p) for p in tree.paths(t)))


def path_complex(tree: RootedTree, t: int) -> SimplicialComplex:
    """Facet complex of ``I_t``.  Void when the tree has no path with ``t`` vertices."""
    _check_t(tree, t)
    return SimplicialComplex(tree.paths(t))


def stanley_reisner_face(ideal: SquarefreeMonomialIdeal, face: Iterable[int]) -> bool:
    face = frozenset(face)
    return not any(g <= face for g in ideal.generators)


def face_table(ideal: SquarefreeMonomialIdeal, max_n: int = MAX_ENUM_VERTICES) -> np.ndarray:
    """Boolean array indexed by subset masks of ``[n]``.

    Bit ``i`` of the index stands for variable ``x_{i+1}``; entry is True
    when the subset is a face of the Stanley-Reisner complex.
    """
    n = ideal.n
    if n > max_n:
        raise GuardError(f"Stanley-Reisner enumeration limited to n <= {max_n}, got {n}")
    masks = np.arange(1 << n, dtype=np.int64)
    ok = np.ones(1 << n, dtype=bool)
    for g in ideal.generators:
        gm = sum(1 << (v - 1) for v in g)
        ok &= (masks & gm) != gm
    return ok


def _table_facets(ok: np.ndarray, n: int) -> list[frozenset[int]]:
    masks = np.arange(1 << n, dtype=np.int64)
    maximal = ok.copy()
    for i in range(n):
        bit = 1 << i
        free = (masks & bit) == 0
        # a face missing vertex i+1 is not maximal if adding it stays a face
        maximal &= ~(free & ok[masks | bit])
    return [frozenset(v + 1 for v in from_mask(int(m))) for m in np.flatnonzero(maximal)]


def stanley_reisner_complex(ideal: SquarefreeMonomialIdeal) -> SimplicialComplex:
    """Maximal subsets of ``[n]`` containing no generator support."""
    ok = face_table(ideal)
    return SimplicialComplex(_table_facets(ok, ideal.n))


def ideal_height(ideal: SquarefreeMonomialIdeal) -> int:
    """Covering number of the generator supports; 0 for the zero ideal."""
    if ideal.is_zero:
        return 0
    return ideal.facet_complex().covering_number()


def is_complete_intersection(ideal: SquarefreeMonomialIdeal) -> bool:
    """Generator supports pairwise disjoint (the zero ideal qualifies)."""
    seen: set[int] = set()
    for g in ideal.generators:
        if seen & g:
            return False
        seen |= g
    return True
