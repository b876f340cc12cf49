"""Quantum graphs: adjacency operators, edge projections and predicates.

Run with ``python3 demos/qgraph_demo.py``.
"""

import numpy as np

from qgraphs import corpus
from qgraphs.qgraph import bipartite_double, orientation_rank_obstruction, schur_product

# The rank-one irreflexive graph on tracial M_2.
G = corpus.get("m2_nonorientable")
A = G.A
print("A idempotent under the Schur product:", np.allclose(schur_product(G.adj, G.adj).matrix, A))
for name in ("is_real", "is_undirected", "is_irreflexive", "is_reflexive", "is_regular"):
    print(f"  {name:16s} {getattr(G, name)}")
print("degree", G.degree)
print("edge projection block:\n", np.real(G.edge_projection.matrix))

# Rank one edge space rules out any orientation.
o = orientation_rank_obstruction(G)
print("orientation possible:", o.orientable_possible, "-", o.reason)

# The bipartite double lives on M_2 (+) M_2.
D = bipartite_double(G)
print("double: blocks", D.qset.blocks, "regular", D.is_regular, "degree", D.degree)
