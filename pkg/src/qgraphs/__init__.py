"""Finite quantum graphs: Schur calculus, spectra, and star-homomorphisms."""

from .errors import *  # noqa: F401,F403
from .qalg import (  # noqa: F401
    AlgebraElement,
    QuantumSet,
    SuperOp,
    Tolerance,
    make_quantum_set,
    random_quantum_set,
    tracial_form,
)
from .qgraph import (  # noqa: F401
    QuantumGraph,
    classical_graph,
    complete_graph,
    schur_product,
    trivial_graph,
)

__version__ = "0.1.0"
