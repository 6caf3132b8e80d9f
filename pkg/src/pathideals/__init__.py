"""Cohen-Macaulay and Gorenstein classification of path ideals of rooted trees.

Quick start::

    >>> from pathideals import line_tree, classify
    >>> r = classify(line_tree(6), 3)
    >>> r.cohen_macaulay, r.gorenstein
    (True, False)
"""

from .classify import (
    ClassificationReport,
    TBranch,
    TPartitionCertificate,
    classify,
    clean,
    is_fitting,
    is_line,
    leaf_facet_candidates,
    t_branches,
    t_partition,
)
from .complexes import GuardError, SimplicialComplex, from_facets
from .ideal import (
    SquarefreeMonomialIdeal,
    ideal_height,
    is_complete_intersection,
    path_complex,
    path_ideal,
    stanley_reisner_complex,
    stanley_reisner_face,
)
from .oracles import (
    CrossValidation,
    OracleVerdict,
    ci_oracle,
    cross_validate,
    konig_unmixed_oracle,
    matroid_oracle,
    stanley_gorenstein_oracle,
    sweep,
    unmixed_oracle,
)
from .tree import (
    RootedTree,
    TreeParseError,
    enumerate_paths,
    line_tree,
    parse_tree,
    random_corpus,
    random_tree,
)

__version__ = "0.1.0"
