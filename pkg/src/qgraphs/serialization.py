"""JSON documents for quantum graphs and homomorphism certificates.

Complex numbers are stored as ``[re, im]`` pairs.  Adjacency matrices are
written over the GNS basis ``E_ij / sqrt(q_j)`` ordered by block, then row,
then column.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from .errors import QGraphError
from .homs import StarHom, make_star_hom
from .qalg import QuantumSet, SuperOp, Tolerance, make_quantum_set
from .qgraph import QuantumGraph

FORMAT_VERSION = 1
BASIS_DOC = "GNS basis E_ij/sqrt(q_j) of each block, ordered by block, row, column"


class ParseError(QGraphError):
    """Malformed document (as opposed to a well-formed document violating an axiom)."""


def _pairs(M) -> list:
    M = np.asarray(M, dtype=complex)
    # + 0.0 turns -0.0 into 0.0 so documents are sign-stable
    return [[[float(z.real) + 0.0, float(z.imag) + 0.0] for z in row] for row in M]


def _unpairs(data, what: str) -> np.ndarray:
    try:
        arr = np.asarray(data, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{what}: expected a matrix of [re, im] pairs") from exc
    if arr.ndim != 3 or arr.shape[2] != 2:
        raise ParseError(f"{what}: expected a matrix of [re, im] pairs, got shape {arr.shape}")
    return arr[..., 0] + 1j * arr[..., 1]


def qset_to_dict(q: QuantumSet) -> dict:
    return {"blocks": list(q.blocks), "density": [[float(x) for x in d] for d in q.density]}


def qset_from_dict(d: dict, tol: Tolerance | None = None) -> QuantumSet:
    try:
        blocks, density = d["blocks"], d["density"]
    except (KeyError, TypeError) as exc:
        raise ParseError("qset needs 'blocks' and 'density'") from exc
    return make_quantum_set(blocks, density, tol=tol)


def graph_to_document(G: QuantumGraph, provenance: str | None = None) -> dict:
    meta: dict[str, Any] = {"name": G.name}
    if provenance:
        meta["provenance"] = provenance
    return {
        "format_version": FORMAT_VERSION,
        "basis": BASIS_DOC,
        "qset": qset_to_dict(G.qset),
        "adjacency": _pairs(G.A),
        "metadata": meta,
    }


def graph_from_document(doc: dict, tol: Tolerance | None = None) -> QuantumGraph:
    if not isinstance(doc, dict):
        raise ParseError("graph document must be a JSON object")
    if doc.get("format_version") != FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {doc.get('format_version')!r}")
    if "qset" not in doc or "adjacency" not in doc:
        raise ParseError("graph document needs 'qset' and 'adjacency'")
    q = qset_from_dict(doc["qset"], tol)
    A = _unpairs(doc["adjacency"], "adjacency")
    if A.shape != (q.dim, q.dim):
        raise ParseError(f"adjacency has shape {A.shape}, expected {(q.dim, q.dim)}")
    name = (doc.get("metadata") or {}).get("name", "")
    kwargs = {"tol": tol} if tol is not None else {}
    return QuantumGraph(q, SuperOp(q, 1, 1, A), name=name, **kwargs)


def hom_to_document(f: StarHom) -> dict:
    images = [[[[_pairs(y) for y in f.images[s][i][j]] for j in range(n)] for i in range(n)]
              for s, n in enumerate(f.domain.blocks)]
    return {"format_version": FORMAT_VERSION, "k": f.k, "images": images}


def hom_from_document(doc: dict, domain: QuantumSet, codomain: QuantumSet, tol: Tolerance | None = None) -> StarHom:
    """Certificate for ``f: domain -> codomain (x) M_k``.

    ``images[s][i][j]`` lists one matrix per codomain block: the image of the
    matrix unit ``E_ij`` of domain block ``s``.
    """
    if not isinstance(doc, dict) or "images" not in doc:
        raise ParseError("hom certificate needs 'images'")
    k = int(doc.get("k", 1))
    try:
        images = [[[[_unpairs(y, "image") for y in doc["images"][s][i][j]] for j in range(n)] for i in range(n)]
                  for s, n in enumerate(domain.blocks)]
    except (IndexError, TypeError) as exc:
        raise ParseError("images do not match the domain block structure") from exc
    return make_star_hom(domain, codomain, k, images, tol)


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=1, sort_keys=True)


def load_json(path: str) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
