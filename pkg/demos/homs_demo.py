"""Homomorphisms of quantum graphs and two-colorings.

Run with ``python3 demos/homs_demo.py``.
"""

import numpy as np

from qgraphs import corpus
from qgraphs.homs import (
    injectivity_report,
    is_graph_homomorphism,
    is_t_homomorphism,
    loc_vs_graph_hom_equivalence,
    toy_four_coloring,
    two_colorable,
    vertex_map_hom,
)
from qgraphs.qalg import tracial_form
from qgraphs.qgraph import empty_graph

# A classical vertex map C6 -> K2 is a graph homomorphism.
C6, K2 = corpus.get("C6"), corpus.get("K2")
f = vertex_map_hom((0, 1, 0, 1, 0, 1), 2)
print("C6 -> K2 alternating:", is_graph_homomorphism(f, C6, K2).is_hom)
print("C6 -> K2 constant:", is_graph_homomorphism(vertex_map_hom((0,) * 6, 2), C6, K2).is_hom)
rep = loc_vs_graph_hom_equivalence(f, C6, K2)
print("loc hom:", rep.loc_hom, "equivalence guaranteed:", rep.hypotheses_hold)

# Two-colorability agrees across the checkable notions on connected examples.
for name in ("C6", "C5", "m2_nonorientable"):
    r = two_colorable(corpus.get(name), "loc")
    print(f"{name}: 2-colorable={r.colorable} symmetric spectrum={r.symmetric_spectrum} five-way agree={r.five_way_agree}")

# A quantum 4-coloring of the edgeless graph on C^2 through M_2.
g = toy_four_coloring()
ok = is_t_homomorphism(g, empty_graph(tracial_form([1, 1])), corpus.get("K4")).is_hom
print("toy 4-coloring is a t-homomorphism:", ok)
print("f f^dagger = 2 id:", np.allclose(injectivity_report(g).ff_dagger, 2 * np.eye(4)))
