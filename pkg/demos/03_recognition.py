"""
Recognising double nested graphs
================================

Given an arbitrary edge list, recover the cell description, or learn why the
graph is not a connected double nested graph.
"""

import random

from nestedtrees import ChainSpec, RecognitionError, count_spanning_trees, expand, recognize, recognize_chain

spec = ChainSpec((2, 1, 3), (1, 2, 2))
edges = expand(spec).edge_list()

# Scramble vertex names and edge order; recognition does not care.
rng = random.Random(1)
names = [f"v{i}" for i in range(spec.order)]
rng.shuffle(names)
scrambled = [(names[u], names[v]) for u, v in edges]
rng.shuffle(scrambled)

# The reported orientation puts the smaller colour class on the U side,
# so (2,1,3;1,2,2) comes back as (1,2,2;2,1,3).
found = recognize(scrambled)
print(found.spec, found.u_cells)
print("tau =", count_spanning_trees(found.spec))

for label, bad in [("triangle", [(0, 1), (1, 2), (2, 0)]),
                   ("C5", [(i, (i + 1) % 5) for i in range(5)]),
                   ("2K2", [(0, 1), (2, 3)]),
                   ("P5", [(0, 1), (1, 2), (2, 3), (3, 4)])]:
    try:
        recognize_chain(bad)
    except RecognitionError as exc:
        print(f"{label}: {exc.reason}")
