"""Finite quantum sets: block algebras with a delta-form.

Run with ``python3 demos/qalg_demo.py``.
"""

import numpy as np

from qgraphs.qalg import comult_map, make_quantum_set, mult_map, random_quantum_set, tracial_form

# The tracial form on C (+) M_2 weights each block by its size.
q = tracial_form([1, 2])
print("blocks", q.blocks, "dim", q.dim, "delta^2", q.delta_sq)
print("densities", [np.round(d, 4).tolist() for d in q.density])

# A non-tracial delta-form on M_2 is fixed by a single density spectrum.
q_nt = make_quantum_set([2], [[1 / 3, 2 / 3]])
print("non-tracial M_2: delta^2 =", q_nt.delta_sq, "tracial:", q_nt.is_tracial)

# The defining law m m^dagger = delta^2 id holds for any delta-form.
rng = np.random.default_rng(0)
for blocks in ([2], [1, 2], [2, 3]):
    r = random_quantum_set(rng, blocks)
    m = mult_map(r).matrix
    err = np.linalg.norm(m @ m.conj().T - r.delta_sq * np.eye(r.dim))
    print(f"random {blocks}: ||m m^dagger - delta^2 id|| = {err:.1e}")

# The comultiplication is the adjoint of the multiplication.
m, mdag = mult_map(q).matrix, comult_map(q).matrix
print("m^dagger matches adjoint:", np.allclose(mdag, m.conj().T))
