"""Small hand-built trees used in tests and demos."""

from .tree import RootedTree

__all__ = ["eleven_vertex_tree", "unfit_partitioned_tree", "fitting_partitioned_tree", "SAMPLES"]


def eleven_vertex_tree() -> RootedTree:
    """Height-3 tree whose four root-to-leaf paths with 4 vertices overlap at the root.

    Vertex 5 is a shallow leaf that cleaning removes for ``t = 4``.
    """
    return RootedTree.from_edges(1, [(1, 2), (1, 3), (2, 4), (2, 5), (4, 8), (4, 9),
                                     (3, 6), (3, 7), (6, 10), (7, 11)])


def unfit_partitioned_tree() -> RootedTree:
    """9 vertices, root is a leaf; 3-partitioned but a non-initial branch sits too deep."""
    return RootedTree.from_edges(1, [(1, 2), (2, 3), (2, 4), (4, 5), (5, 6), (5, 7),
                                     (6, 8), (8, 9)])


def fitting_partitioned_tree() -> RootedTree:
    """9 vertices, three arms from the root; fitting 3-partitioned."""
    return RootedTree.from_edges(1, [(1, 2), (2, 5), (5, 8), (1, 3), (3, 6),
                                     (1, 4), (4, 7), (7, 9)])


SAMPLES = {
    "eleven": eleven_vertex_tree,
    "unfit": unfit_partitioned_tree,
    "fitting": fitting_partitioned_tree,
}
