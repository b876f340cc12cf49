"""Curated example graphs.

Covers classical trivial, complete and cycle graphs, the Petersen graph,
graphs on ``M_2`` (tracial and not), and bipartite doubles, disjoint unions
and tensor products of those.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .qalg import make_quantum_set, tracial_form
from .qgraph import (
    EdgeProjection,
    QuantumGraph,
    bipartite_double,
    classical_digraph,
    classical_graph,
    complete_graph,
    conjugate_graph,
    disjoint_union,
    from_edge_projection,
    tensor_product,
    trivial_graph,
)


def cycle(n: int) -> QuantumGraph:
    A = np.roll(np.eye(n), 1, axis=0) + np.roll(np.eye(n), -1, axis=0)
    return classical_graph(A, name=f"C{n}")


def path(n: int) -> QuantumGraph:
    A = np.zeros((n, n))
    for i in range(n - 1):
        A[i, i + 1] = A[i + 1, i] = 1
    return classical_graph(A, name=f"P{n}")


def petersen() -> QuantumGraph:
    A = np.zeros((10, 10))
    for i in range(5):
        for a, b in ((i, (i + 1) % 5), (i, i + 5), (i + 5, (i + 2) % 5 + 5)):
            A[a, b] = A[b, a] = 1
    return classical_graph(A, name="Petersen")


def m2_nonorientable() -> QuantumGraph:
    """``A = 2E - id`` on tracial ``M_2``, ``E`` the diagonal expectation; ``p_A`` has rank one."""
    q = tracial_form([2])
    p = 0.5 * np.array([[1, 0, 0, -1], [0, 0, 0, 0], [0, 0, 0, 0], [-1, 0, 0, 1]], dtype=complex)
    return from_edge_projection(EdgeProjection(q, (p,)), name="m2_nonorientable")


def m2_nontracial():
    return make_quantum_set([2], [[1 / 3, 2 / 3]])


def _rename(G: QuantumGraph, name: str) -> QuantumGraph:
    return QuantumGraph(G.qset, G.adj, name=name, tol=G.tol, validate=False)


def _rotation() -> np.ndarray:
    t = 0.7
    return np.array([[np.cos(t), -np.sin(t) * np.exp(0.3j)], [np.sin(t) * np.exp(-0.3j), np.cos(t)]])


_BUILDERS = {}

for _n in range(1, 7):
    _BUILDERS[f"T{_n}"] = (lambda n: lambda: trivial_graph(tracial_form([1] * n), name=f"T{n}"))(_n)
    _BUILDERS[f"K{_n}"] = (lambda n: lambda: complete_graph(tracial_form([1] * n), name=f"K{n}"))(_n)
for _n in range(3, 9):
    _BUILDERS[f"C{_n}"] = (lambda n: lambda: cycle(n))(_n)

_BUILDERS.update({
    "Petersen": petersen,
    "m2_nonorientable": m2_nonorientable,
    "T_M2": lambda: trivial_graph(tracial_form([2]), name="T_M2"),
    "K_M2": lambda: complete_graph(tracial_form([2]), name="K_M2"),
    "T_M2_nontracial": lambda: trivial_graph(m2_nontracial(), name="T_M2_nontracial"),
    "K_M2_nontracial": lambda: complete_graph(m2_nontracial(), name="K_M2_nontracial"),
    "m2_rotated": lambda: conjugate_graph(m2_nonorientable(), [_rotation()], name="m2_rotated"),
    "double_K3": lambda: bipartite_double(get("K3"), name="double_K3"),
    "double_C5": lambda: bipartite_double(get("C5"), name="double_C5"),
    "double_m2": lambda: bipartite_double(get("m2_nonorientable"), name="double_m2"),
    "double_K_M2": lambda: bipartite_double(get("K_M2"), name="double_K_M2"),
    "double_K_M2_nontracial": lambda: bipartite_double(get("K_M2_nontracial"), name="double_K_M2_nontracial"),
    "C3+C3": lambda: disjoint_union(get("C3"), get("C3"), name="C3+C3"),
    "C4+C6": lambda: disjoint_union(get("C4"), get("C6"), name="C4+C6"),
    "K2+m2": lambda: disjoint_union(get("K2"), get("m2_nonorientable"), name="K2+m2"),
    "K2xK2": lambda: tensor_product(get("K2"), get("K2"), name="K2xK2"),
    "K2xm2": lambda: tensor_product(get("K2"), get("m2_nonorientable"), name="K2xm2"),
    "C3xK2": lambda: tensor_product(get("C3"), get("K2"), name="C3xK2"),
    "K3xK_M2": lambda: tensor_product(get("K3"), get("K_M2"), name="K3xK_M2"),
    # irregular or directed
    "P3": lambda: path(3),
    "P4": lambda: path(4),
    "C3+m2": lambda: disjoint_union(get("C3"), get("m2_nonorientable"), name="C3+m2"),
    "arc": lambda: classical_digraph(2, [(0, 1)], name="arc"),
    "directed_C3": lambda: classical_digraph(3, [(0, 1), (1, 2), (2, 0)], name="directed_C3"),
})


def names() -> list[str]:
    return list(_BUILDERS)


@lru_cache(maxsize=None)
def get(name: str) -> QuantumGraph:
    try:
        G = _BUILDERS[name]()
    except KeyError:
        raise KeyError(f"unknown example {name!r}; known: {', '.join(_BUILDERS)}") from None
    return G if G.name == name else _rename(G, name)


def all_graphs() -> list[QuantumGraph]:
    return [get(n) for n in names()]
