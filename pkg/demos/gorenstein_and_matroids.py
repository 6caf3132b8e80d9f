"""
Gorenstein, complete intersection and matroid
=============================================

Four tests that look unrelated agree on path ideals of trees: pairwise
disjoint generators, the exchange axiom on the Stanley-Reisner complex,
the link and Euler test, and the clean form being a chain of t vertices.
"""

from pathideals import (RootedTree, ci_oracle, classify, line_tree, matroid_oracle, path_ideal,
                        stanley_gorenstein_oracle, stanley_reisner_complex)

# a chain with a short extra leaf: the leaf is cleaned away and a chain remains
hook = RootedTree.from_edges(1, [(1, 2), (2, 3), (1, 4)])
cases = [(line_tree(3), 3), (hook, 3), (line_tree(4), 2), (line_tree(6), 3)]

for tree, t in cases:
    ideal = path_ideal(tree, t)
    r = classify(tree, t)
    m = matroid_oracle(ideal)
    s = stanley_gorenstein_oracle(ideal, tree, t)
    c = ci_oracle(ideal)
    print(f"{ideal}  t={t}")
    print(f"  classify={r.gorenstein} matroid={m.verdict} stanley={s.verdict} ci={c.verdict}")
    if not m:
        print("  exchange fails for", m.witness)
    if not s and "face" in s.witness:
        print("  bad link at face", s.witness["face"], "edges", s.witness["link_edges"])

# the Stanley-Reisner complex of the triangle ideal is the boundary of a triangle
print(stanley_reisner_complex(path_ideal(line_tree(3), 3)).to_dict()["facets"])
