"""
Walking one tree through the classifier
=======================================

Clean an eleven-vertex tree, list its path ideal and see why it fails
to be Cohen-Macaulay for paths with four vertices.
"""

from pathideals import classify, clean, path_complex, path_ideal
from pathideals.samples import eleven_vertex_tree

tree = eleven_vertex_tree()
t = 4
print(tree.to_text())

# the generators: one monomial per directed path with four vertices
ideal = path_ideal(tree, t)
print("I_4 =", ideal)

# vertex 5 sits too high to start or end such a path, so cleaning drops it
ctree, removed = clean(tree, t)
print("removed while cleaning:", sorted(removed))

# every leaf's path runs through the root, so the leaf facets overlap
report = classify(tree, t)
print("partitioned:", report.partitioned)
print("why not:", report.failure_witness)

# the covers tell the same story from the other side
covers = path_complex(tree, t).minimal_vertex_covers()
print("minimal cover sizes:", sorted({len(c) for c in covers}))
print("height", report.height, "krull dim", report.krull_dim)
