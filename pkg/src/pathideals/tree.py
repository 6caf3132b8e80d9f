"""Directed rooted trees.

Edges point away from the root.  A *path of length t* is a directed path
with ``t`` vertices (and ``t - 1`` edges); this differs from the usual
graph-theoretic convention where the length counts edges.
"""

from __future__ import annotations

import json
import random
from collections.abc import Iterable, Mapping

__all__ = [
    "RootedTree",
    "TreeParseError",
    "parse_tree",
    "line_tree",
    "random_tree",
    "random_corpus",
    "enumerate_paths",
    "level",
    "height",
    "leaves",
]

Path = tuple[int, ...]


class TreeParseError(ValueError):
    """Raised for malformed tree descriptions."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class RootedTree:
    """Immutable directed rooted tree with positive integer vertex labels.

    Parameters
    ----------
    root : int
        The distinguished root vertex.
    children : mapping
        ``children[v]`` lists the children of ``v``.  Vertices without
        children may be omitted.  Child lists are stored sorted.
    """

    __slots__ = ("_root", "_children", "_parent", "_level")

    def __init__(self, root: int, children: Mapping[int, Iterable[int]] | None = None):
        children = children or {}
        parent: dict[int, int] = {}
        kids: dict[int, tuple[int, ...]] = {}
        for u, vs in children.items():
            vs = tuple(sorted(vs))
            if len(set(vs)) != len(vs):
                raise ValueError(f"duplicate child under {u}")
            for v in vs:
                if v in parent:
                    raise ValueError(f"vertex {v} has two parents ({parent[v]}, {u})")
                if v == root:
                    raise ValueError(f"root {root} cannot have a parent")
                parent[v] = u
            kids[u] = vs

        # walk from the root; anything not reached is disconnected or on a cycle
        level = {root: 0}
        stack = [root]
        while stack:
            u = stack.pop()
            for v in kids.get(u, ()):
                level[v] = level[u] + 1
                stack.append(v)
        named = {root} | set(parent) | set(kids)
        stray = named - set(level)
        if stray:
            raise ValueError(f"vertices not reachable from root {root}: {sorted(stray)}")
        for v in named:
            if not (isinstance(v, int) and v > 0):
                raise ValueError(f"vertex labels must be positive integers, got {v!r}")

        self._root = root
        self._children = {v: kids.get(v, ()) for v in sorted(level)}
        self._parent = parent
        self._level = level

    @classmethod
    def from_edges(cls, root: int, edges: Iterable[tuple[int, int]]) -> RootedTree:
        children: dict[int, list[int]] = {}
        for u, v in edges:
            children.setdefault(u, []).append(v)
        return cls(root, children)

    # -- basic accessors ---------------------------------------------------

    @property
    def root(self) -> int:
        return self._root

    @property
    def n(self) -> int:
        return len(self._children)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(self._children)

    def __contains__(self, v: object) -> bool:
        return v in self._children

    def children(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return self._children[v]

    def parent(self, v: int) -> int | None:
        self._check(v)
        return self._parent.get(v)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, vs in self._children.items() for v in vs]

    def level(self, v: int) -> int:
        """Number of edges on the path from the root to ``v``."""
        self._check(v)
        return self._level[v]

    def height(self) -> int:
        return max(self._level.values())

    def degree(self, v: int) -> int:
        """Undirected degree."""
        self._check(v)
        return len(self._children[v]) + (v != self._root)

    def leaves(self) -> frozenset[int]:
        """Vertices of undirected degree 1.

        The root counts when it has exactly one child.  A single-vertex tree
        has the root as its only leaf.
        """
        if self.n == 1:
            return frozenset({self._root})
        return frozenset(v for v in self._children if self.degree(v) == 1)

    def is_line(self) -> bool:
        """True when the tree is a single chain hanging from the root."""
        return all(len(vs) <= 1 for vs in self._children.values())

    def ancestors(self, v: int, k: int) -> Path | None:
        """The path of ``k`` vertices ending at ``v``, or None if too shallow."""
        if self._level[v] < k - 1:
            return None
        out = [v]
        while len(out) < k:
            out.append(self._parent[out[-1]])
        return tuple(reversed(out))

    def paths(self, t: int) -> list[Path]:
        """All directed paths with ``t`` vertices, sorted lexicographically.

        Every such path is fixed by its last vertex, so this walks ``t - 1``
        steps up from each deep enough vertex.
        """
        if t < 1:
            raise ValueError(f"path length must be >= 1, got {t}")
        found = (self.ancestors(v, t) for v in self._children)
        return sorted(p for p in found if p is not None)

    # -- derived trees -----------------------------------------------------

    def without(self, removed: Iterable[int]) -> RootedTree:
        """Delete a set of vertices that is closed under taking descendants."""
        removed = set(removed)
        if self._root in removed:
            raise ValueError("cannot remove the root")
        for v in removed:
            self._check(v)
            if any(c not in removed for c in self._children[v]):
                raise ValueError(f"vertex {v} has surviving children")
        kids = {u: [v for v in vs if v not in removed]
                for u, vs in self._children.items() if u not in removed}
        return RootedTree(self._root, kids)

    def rerooted(self, r: int) -> RootedTree:
        """Same undirected tree with edges re-oriented away from ``r``."""
        self._check(r)
        adj: dict[int, list[int]] = {v: [] for v in self._children}
        for u, v in self.edges():
            adj[u].append(v)
            adj[v].append(u)
        kids: dict[int, list[int]] = {}
        seen = {r}
        stack = [r]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    kids.setdefault(u, []).append(v)
                    stack.append(v)
        return RootedTree(r, kids)

    # -- serialization -----------------------------------------------------

    def to_text(self) -> str:
        lines = [f"root {self._root}"]
        lines += [f"{u} {v}" for u, v in self.edges()]
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {"root": self._root, "edges": [list(e) for e in self.edges()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RootedTree):
            return NotImplemented
        return self._root == other._root and self._children == other._children

    def __hash__(self) -> int:
        return hash((self._root, tuple(self._children.items())))

    def __repr__(self) -> str:
        return f"RootedTree(root={self._root}, edges={self.edges()})"

    def _check(self, v: int) -> None:
        if v not in self._children:
            raise KeyError(f"vertex {v} is not in the tree")


# -- module-level helpers ----------------------------------------------------

def level(tree: RootedTree, v: int) -> int:
    return tree.level(v)


def height(tree: RootedTree) -> int:
    return tree.height()


def leaves(tree: RootedTree) -> frozenset[int]:
    return tree.leaves()


def enumerate_paths(tree: RootedTree, t: int) -> list[Path]:
    """Directed paths with ``t`` vertices; empty when the tree is too shallow."""
    if t < 2:
        raise ValueError(f"t must be at least 2, got {t}")
    return tree.paths(t)


def line_tree(n: int) -> RootedTree:
    """The chain 1 -> 2 -> ... -> n rooted at 1."""
    if n < 1:
        raise ValueError(f"a line needs at least one vertex, got n={n}")
    return RootedTree(1, {i: [i + 1] for i in range(1, n)})


def random_tree(n: int, seed: int) -> RootedTree:
    """Random tree on 1..n rooted at 1.

    Vertex ``i`` picks its parent uniformly from ``1..i-1``.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    rng = random.Random(seed)
    return RootedTree.from_edges(1, ((rng.randint(1, i - 1), i) for i in range(2, n + 1)))


def random_corpus(count: int, n_max: int, seed: int = 0, n_min: int = 2) -> list[RootedTree]:
    """``count`` reproducible random trees with sizes drawn from ``n_min..n_max``."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        out.append(random_tree(n, rng.randrange(2**32)))
    return out


def parse_tree(text: str) -> RootedTree:
    """Parse the edge-list text format or its JSON equivalent.

    Text format::

        # comment
        root 1
        1 2
        2 3

    JSON format: ``{"root": 1, "edges": [[1, 2], [2, 3]]}``.

    Vertex labels must be exactly ``1..n``.
    """
    if text.lstrip().startswith("{"):
        return _parse_json(text)

    root = None
    edges: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "root":
            if len(parts) != 2:
                raise TreeParseError("expected 'root <id>'", lineno)
            if root is not None:
                raise TreeParseError("root declared twice", lineno)
            root = _label(parts[1], lineno)
            continue
        if len(parts) != 2:
            raise TreeParseError(f"expected '<parent> <child>', got {line!r}", lineno)
        edges.append((_label(parts[0], lineno), _label(parts[1], lineno), lineno))
    if root is None:
        raise TreeParseError("missing 'root <id>' line")
    return _build(root, edges)


def _parse_json(text: str) -> RootedTree:
    try:
        data = json.loads(text)
        root = data["root"]
        raw_edges = data.get("edges", [])
    except (json.JSONDecodeError, KeyError, TypeError, AttributeError) as exc:
        raise TreeParseError(f"bad tree JSON: {exc}") from None
    edges = []
    for i, e in enumerate(raw_edges):
        if not (isinstance(e, list) and len(e) == 2):
            raise TreeParseError(f"edge #{i} is not a pair: {e!r}")
        edges.append((_label(e[0], None), _label(e[1], None), None))
    return _build(_label(root, None), edges)


def _label(tok, lineno: int | None) -> int:
    try:
        v = int(tok)
    except (TypeError, ValueError):
        raise TreeParseError(f"vertex label {tok!r} is not an integer", lineno) from None
    if v < 1:
        raise TreeParseError(f"vertex label {v} is not positive", lineno)
    return v


def _build(root: int, edges: list[tuple[int, int, int | None]]) -> RootedTree:
    seen: set[tuple[int, int]] = set()
    parent: dict[int, int] = {}
    where: dict[int, int | None] = {}
    for u, v, lineno in edges:
        if u == v:
            raise TreeParseError(f"self-loop at {u}", lineno)
        if (u, v) in seen:
            raise TreeParseError(f"duplicate edge {u} {v}", lineno)
        seen.add((u, v))
        if v == root:
            raise TreeParseError(f"edge {u} {v} points into the root", lineno)
        if v in parent:
            raise TreeParseError(f"vertex {v} has multiple parents ({parent[v]}, {u})", lineno)
        parent[v] = u
        where[v] = lineno
    # every non-root vertex now has one parent; walking up must reach the root
    for v in parent:
        steps, w = 0, v
        while w != root:
            if w not in parent:
                raise TreeParseError(f"vertex {v} is not connected to root {root}", where[v])
            w = parent[w]
            steps += 1
            if steps > len(parent):
                raise TreeParseError(f"cycle through vertex {v}", where[v])
    labels = {root} | set(parent)
    if labels != set(range(1, len(labels) + 1)):
        raise TreeParseError(f"vertex labels must be 1..{len(labels)}, got {sorted(labels)}")
    return RootedTree.from_edges(root, [(u, v) for u, v, _ in edges])
