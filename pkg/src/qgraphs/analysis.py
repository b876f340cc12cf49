"""Batch analysis report for a single quantum graph."""

from __future__ import annotations

import numpy as np

from .errors import HypothesesNotMet
from .homs import injectivity_report
from .qgraph import QuantumGraph, edge_count, orientation_rank_obstruction
from .spectral import (
    bipartition_witness,
    disconnection_witness,
    has_bipartite_component,
    is_bipartite,
    is_connected,
    laplacian,
    norm_hypotheses,
    operator_norm,
    spectral_radius,
    spectrum,
)


def _c(z: complex) -> list[float]:
    z = complex(z)
    return [round(z.real, 12) + 0.0, round(z.imag, 12) + 0.0]


def _element(x) -> list:
    return [[[_c(z) for z in row] for row in b] for b in x.blocks]


def _hypotheses(G: QuantumGraph) -> dict:
    return {"regular": G.is_regular, "undirected": G.is_undirected, "tracial": G.is_tracial}


def analyze(G: QuantumGraph) -> dict:
    """Predicates, spectrum, norms, Laplacian extremes, gated verdicts with witnesses, orientation report."""
    sp = spectrum(G)
    d = G.degree
    rep: dict = {
        "name": G.name,
        "blocks": list(G.qset.blocks),
        "dim": G.dim,
        "delta_sq": G.qset.delta_sq,
        "predicates": {
            "real": G.is_real,
            "undirected": G.is_undirected,
            "kms_symmetric": G.is_kms_symmetric,
            "reflexive": G.is_reflexive,
            "irreflexive": G.is_irreflexive,
            "no_partial_loops": G.has_no_partial_loops,
            "schur_central": G.is_schur_central if G.is_real else None,
            "regular": G.is_regular,
            "tracial": G.is_tracial,
        },
        "degree": None if d is None else (_c(d) if isinstance(d, complex) else _c(d)[0]),
        "spectrum": [{"value": _c(c), "multiplicity": m} for c, m in sp.clusters],
        "spectrum_symmetric": sp.symmetric,
        "spectral_radius": spectral_radius(G),
        "norm_gns": operator_norm(G, "gns"),
        "norm_kms": operator_norm(G, "kms"),
        "norm_hypotheses": norm_hypotheses(G),
    }
    if G.is_real:
        w = np.linalg.eigvalsh(laplacian(G).matrix)
        rep["edge_count"] = edge_count(G)
        rep["laplacian"] = {"min": float(w.min()), "max": float(w.max())}
    hyp = _hypotheses(G)
    conn: dict = {"hypotheses": hyp}
    bip: dict = {"hypotheses": hyp}
    try:
        conn["connected"] = is_connected(G)
        f = disconnection_witness(G)
        if f is not None:
            x1, x2 = (G.qset.element(f.images[s][0][0]) for s in (0, 1))
            conn["witness"] = {"x1": _element(x1), "x2": _element(x2)}
        bip["has_bipartite_component"] = has_bipartite_component(G)
        bip["bipartite"] = is_bipartite(G)
        wb = bipartition_witness(G)
        if wb is not None:
            bip["witness"] = {"target": wb.target, "x_plus": _element(wb.x_plus), "x_minus": _element(wb.x_minus)}
    except HypothesesNotMet as exc:
        conn["verdict"] = bip["verdict"] = f"not evaluated: {exc}"
    rep["connectivity"] = conn
    rep["bipartiteness"] = bip
    if G.is_undirected:
        o = orientation_rank_obstruction(G)
        rep["orientation"] = {"rank_p": o.rank_p, "edge_space_dim": o.edge_space_dim,
                              "orientable_possible": o.orientable_possible, "reason": o.reason}
    return rep


def format_text(rep: dict) -> str:
    lines = [f"graph {rep['name'] or '(unnamed)'}: blocks {rep['blocks']}, dim {rep['dim']}, "
             f"delta^2 {rep['delta_sq']:.6g}"]
    for k, v in rep["predicates"].items():
        lines.append(f"  {k:18s} {v}")
    lines.append(f"  {'degree':18s} {rep['degree']}")
    spec = ", ".join(f"{complex(*e['value']):.6g}^{e['multiplicity']}" for e in rep["spectrum"])
    lines.append(f"  {'spectrum':18s} {{{spec}}}")
    lines.append(f"  {'r(A)':18s} {rep['spectral_radius']:.10g}")
    lines.append(f"  {'||A|| gns / kms':18s} {rep['norm_gns']:.10g} / {rep['norm_kms']:.10g}")
    if "edge_count" in rep:
        lines.append(f"  {'edge count':18s} {rep['edge_count']:.10g}")
        lines.append(f"  {'laplacian range':18s} [{rep['laplacian']['min']:.6g}, {rep['laplacian']['max']:.6g}]")
    for key in ("connectivity", "bipartiteness"):
        sec = {k: v for k, v in rep[key].items() if k not in ("hypotheses", "witness")}
        lines.append(f"  {key:18s} {sec}")
        if "witness" in rep[key]:
            lines.append(f"  {'':18s} witness present ({rep[key]['witness'].get('target', 'T2')})")
    if "orientation" in rep:
        o = rep["orientation"]
        lines.append(f"  {'orientation':18s} rank p_A = {o['rank_p']}, possible = {o['orientable_possible']} ({o['reason']})")
    return "\n".join(lines)


def hom_report(f, G0, G1) -> dict:
    from .homs import is_graph_homomorphism, is_surjective, is_t_homomorphism, loc_vs_graph_hom_equivalence

    t = is_t_homomorphism(f, G0, G1)
    out = {"k": f.k, "t_homomorphism": t.is_hom, "t_residuals": t.details, "surjective": is_surjective(f)}
    inj = injectivity_report(f)
    out["injectivity"] = {"f_dagger_injective": inj.f_dagger_injective, "coisometry": inj.coisometry,
                          "strong_surjective": inj.strong_surjective}
    if f.k == 1:
        g = is_graph_homomorphism(f, G0, G1)
        eq = loc_vs_graph_hom_equivalence(f, G0, G1)
        out.update({"graph_homomorphism": g.is_hom, "graph_residual": g.residual_norm,
                    "equivalence_hypotheses": eq.hypotheses, "equivalence_guaranteed": eq.hypotheses_hold,
                    "violation": eq.violation})
    return out
