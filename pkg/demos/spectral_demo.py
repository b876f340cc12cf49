"""Spectral verdicts with constructive witnesses.

Run with ``python3 demos/spectral_demo.py``.
"""

import numpy as np

from qgraphs import corpus
from qgraphs.homs import T2, is_graph_homomorphism
from qgraphs.spectral import (
    bipartition_witness,
    disconnection_witness,
    gradient,
    is_bipartite,
    is_connected,
    laplacian,
    operator_norm,
    spectral_radius,
    spectrum,
)

for name in ("C5", "C6", "C4+C6", "m2_nonorientable", "K_M2_nontracial"):
    G = corpus.get(name)
    sp = np.round(np.real(spectrum(G).as_sorted_list()), 6)
    print(f"{name}: d={G.degree} r(A)={spectral_radius(G):.6g} ||A||_gns={operator_norm(G, 'gns'):.6g} spectrum={sp.tolist()}")

# Connectedness and bipartiteness come with witnesses on tracial undirected regular graphs.
for name in ("C4+C6", "m2_nonorientable", "C3+C3"):
    G = corpus.get(name)
    f = disconnection_witness(G)
    w = bipartition_witness(G)
    print(f"{name}: connected={is_connected(G)} bipartite={is_bipartite(G)}")
    if f is not None:
        print("   disconnection witness maps onto T2:", is_graph_homomorphism(f, G, T2()).is_hom)
    if w is not None:
        print("   bipartition witness target:", w.target)

# The gradient on a classical path is the coboundary x_j - x_i on each edge.
P = corpus.get("P3")
x = np.array([0.0, 1.0, 3.0])
gx = (gradient(P).matrix @ (x / np.sqrt(3))).reshape(3, 3) * 3
print("gradient on P3:\n", np.round(gx.real, 12))
print("Laplacian eigenvalues:", np.round(np.linalg.eigvalsh(laplacian(P).matrix), 6).tolist())
