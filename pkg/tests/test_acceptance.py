"""Acceptance criteria, each at its stated tolerance.

Every test records a single PASS/FAIL line, printed in the terminal summary.
"""

import itertools
import time

import numpy as np
import pytest

import classical_oracle as oracle
from qgraphs import corpus
from qgraphs.homs import (
    K2,
    T2,
    K2_sqcup_T1,
    identity_hom,
    injectivity_report,
    is_graph_homomorphism,
    is_t_homomorphism,
    loc_vs_graph_hom_equivalence,
    random_star_hom,
    toy_four_coloring,
    two_colorable,
    verify_trivial_inclusion,
    vertex_map_hom,
)
from qgraphs.qalg import comult_map, left_mult, make_quantum_set, mult_map, random_element, random_quantum_set, right_mult, tracial_form
from qgraphs.qgraph import classical_digraph, classical_graph, empty_graph, orientation_rank_obstruction, random_graph
from qgraphs.spectral import (
    bipartition_witness,
    commutator_form,
    disconnection_witness,
    gradient,
    has_bipartite_component,
    iota_inverse_of_gradient,
    is_bipartite,
    is_connected,
    laplacian,
    laplacian_closed_form,
    norm_hypotheses,
    operator_norm,
    posneg_bound,
    spectral_radius,
    spectrum,
    verify_posneg_counterexample,
)
from qgraphs.homs import is_surjective

ALL = corpus.all_graphs()
REGULAR = [G for G in ALL if G.is_regular]
RUT = [G for G in REGULAR if G.is_undirected and G.is_tracial]
P_M2 = 0.5 * np.array([[1, 0, 0, -1], [0, 0, 0, 0], [0, 0, 0, 0], [-1, 0, 0, 1]])


def is_classical(G):
    return all(n == 1 for n in G.qset.blocks)


def classical_matrix(G):
    return np.rint(G.A.real).astype(int)


# ---------------------------------------------------------------------------


def test_c1_delta_form_law(acceptance):
    rng = np.random.default_rng(1)
    profiles = [[1], [2], [3], [1, 1], [1, 2], [2, 2], [1, 3], [1, 1, 2], [2, 3], [1, 1, 1, 1]]
    t0 = time.perf_counter()
    worst = 0.0
    for k in range(20):
        q = random_quantum_set(rng, profiles[k % len(profiles)], tracial=k % 4 == 0)
        m = mult_map(q).matrix
        err = np.linalg.norm(m @ m.conj().T - q.delta_sq * np.eye(q.dim)) / q.delta_sq
        worst = max(worst, err)
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-9 and elapsed < 1.0
    acceptance("C1 delta-form law on 20 random quantum sets", ok, f"max err {worst:.1e}, {elapsed:.2f} s")
    assert ok


def test_c2_radius_and_norms(acceptance):
    t0 = time.perf_counter()
    bad = []
    gns_checked = 0
    for G in REGULAR:
        d = G.degree
        tol = 1e-8 * max(1, d)
        if abs(spectral_radius(G) - d) > tol:
            bad.append(f"{G.name} r")
        hyp = norm_hypotheses(G)
        if hyp["undirected"] or hyp["real_tracial"]:
            gns_checked += 1
            if abs(operator_norm(G, "gns") - d) > tol:
                bad.append(f"{G.name} gns")
        if G.is_real and abs(operator_norm(G, "kms") - d) > tol:
            bad.append(f"{G.name} kms")
    elapsed = time.perf_counter() - t0
    names = {G.name for G in REGULAR}
    ok = not bad and len(REGULAR) >= 25 and "K_M2_nontracial" in names and elapsed < 5.0
    acceptance("C2 r(A) = d, GNS and KMS norms = d", ok,
               f"{len(REGULAR)} regular graphs, {gns_checked} GNS cases, {elapsed:.2f} s" + (f", bad {bad}" if bad else ""))
    assert ok


def test_c3_m2_golden(acceptance):
    G = corpus.get("m2_nonorientable")
    q = G.qset
    checks = {}
    checks["spectrum"] = np.allclose(np.real(spectrum(G).as_sorted_list()), [-1, -1, 1, 1], atol=1e-12)
    checks["p_A"] = np.abs(G.edge_projection.matrix - P_M2).max() <= 1e-12
    o = orientation_rank_obstruction(G)
    checks["obstruction"] = o.rank_p == 1 and not o.orientable_possible
    checks["disconnected"] = not is_connected(G)
    f = disconnection_witness(G)
    checks["disconnection witness"] = is_graph_homomorphism(f, G, T2()).is_hom and is_surjective(f)
    checks["bipartite"] = is_bipartite(G)
    x = q.element([np.array([[0.0, 1.0], [1.0, 0.0]])])
    w = bipartition_witness(G, x=x)
    sx = x.blocks[0]
    checks["x_+-"] = (w.target == "K2"
                      and np.abs(w.x_plus.blocks[0] - (np.eye(2) + sx) / 2).max() <= 1e-12
                      and np.abs(w.x_minus.blocks[0] - (np.eye(2) - sx) / 2).max() <= 1e-12
                      and is_graph_homomorphism(w.hom, G, K2()).is_hom and is_surjective(w.hom))
    ok = all(checks.values())
    acceptance("C3 M2 example golden values", ok, ", ".join(k for k, v in checks.items() if not v) or "all checks")
    assert ok


def test_c4_gradient_stack(acceptance):
    rng = np.random.default_rng(4)
    # classical coboundary oracle
    grad_err = 0.0
    for _ in range(50):
        n = int(rng.integers(1, 7))
        edges = [(i, j) for i in range(n) for j in range(n) if rng.random() < 0.45]
        G = classical_digraph(n, edges)
        x = rng.standard_normal(n)
        got = (gradient(G).matrix @ (x / np.sqrt(n))).reshape(n, n) * n
        want = np.zeros((n, n))
        for i, j in edges:
            want[i, j] = x[j] - x[i]
        grad_err = max(grad_err, np.abs(got - want).max())
    # commutator, Leibniz, Laplacian
    profiles = [[2], [1, 2], [1, 1], [2, 2], [3], [1, 1, 1]]
    comm_err = leib_err = 0.0
    lap_min, lap_err = np.inf, 0.0
    for k in range(100):
        blocks = profiles[k % len(profiles)]
        q = tracial_form(blocks) if k % 3 == 0 else random_quantum_set(rng, blocks)
        G = random_graph(q, rng)
        x, y = random_element(rng, q), random_element(rng, q)
        lhs = q.delta_sq * iota_inverse_of_gradient(G, x)
        rhs = commutator_form(G, x)
        comm_err = max(comm_err, np.linalg.norm(lhs - rhs) / max(1, np.linalg.norm(rhs)))
        g = gradient(G).matrix
        I = np.eye(q.dim)
        lz = g @ (x * y).vector
        rz = np.kron(I, right_mult(y).matrix) @ (g @ x.vector) + np.kron(left_mult(x).matrix, I) @ (g @ y.vector)
        leib_err = max(leib_err, np.linalg.norm(lz - rz) / max(1, np.linalg.norm(lz)))
        if k < 40:
            L = laplacian(G).matrix
            lap_min = min(lap_min, np.linalg.eigvalsh((L + L.conj().T) / 2).min())
            C = laplacian_closed_form(G).matrix
            lap_err = max(lap_err, np.linalg.norm(L - C) / max(1, np.linalg.norm(C)))
    # Hermitian-part bound on regular real graphs
    herm_ok = True
    for G in REGULAR:
        if not G.is_real:
            continue
        for theta in np.exp(2j * np.pi * rng.random(3)):
            H = (theta * G.A + np.conj(theta) * G.A.conj().T) / 2
            herm_ok &= bool(np.linalg.eigvalsh(H).max() <= G.degree + 1e-9)
    ok = grad_err <= 1e-10 and comm_err <= 1e-9 and leib_err <= 1e-9 and lap_min >= -1e-9 and lap_err <= 1e-9 and herm_ok
    acceptance("C4 gradient, commutator, Leibniz, Laplacian", ok,
               f"grad {grad_err:.1e}, comm {comm_err:.1e}, leibniz {leib_err:.1e}, "
               f"lap min {lap_min:.1e}, closed form {lap_err:.1e}, hermitian bound {herm_ok}")
    assert ok


def test_c5_connected_bipartite_verdicts(acceptance):
    disagreements = []
    classical = 0
    for G in RUT:
        conn = is_connected(G)
        f = disconnection_witness(G)
        if conn != (f is None):
            disagreements.append(f"{G.name}: connectivity vs witness")
        w = bipartition_witness(G)
        if has_bipartite_component(G) != (w is not None):
            disagreements.append(f"{G.name}: component vs witness")
        bip = is_bipartite(G)
        if bip != (w is not None and w.target == "K2"):
            disagreements.append(f"{G.name}: bipartite vs witness")
        if is_classical(G):
            classical += 1
            A = classical_matrix(G)
            if (conn, bip, w is not None) != (oracle.is_connected(A), oracle.is_bipartite(A),
                                               oracle.has_bipartite_component(A)):
                disagreements.append(f"{G.name}: classical oracle")
    ok = not disagreements
    acceptance("C5 connectedness/bipartiteness verdicts, witnesses, classical oracle", ok,
               f"{len(RUT)} graphs, {classical} classical" + (f", {disagreements}" if disagreements else ""))
    assert ok


# ---------------------------------------------------------------------------


def _t_hom_triples(rng):
    """(f, G0, G1) triples with mixed verdicts, k = 1 and k = 2."""
    triples = []
    pairs = [
        (tracial_form([1, 1]), tracial_form([2])),
        (tracial_form([1, 1, 1]), tracial_form([1, 2])),
        (tracial_form([2]), tracial_form([2, 2])),
        (tracial_form([1, 1]), make_quantum_set([2], [[1 / 3, 2 / 3]])),
        (tracial_form([1, 2]), tracial_form([3])),
        (tracial_form([1, 1]), tracial_form([1, 1, 1])),
    ]
    for k in range(150):
        q1, q0 = pairs[k % len(pairs)]
        kk = 1 + (k // len(pairs)) % 2
        f = random_star_hom(rng, q1, q0, k=kk)
        G0 = random_graph(q0, rng, fill=0.3) if k % 5 else empty_graph(q0)
        G1 = random_graph(q1, rng, fill=0.7) if k % 7 else corpus.get("K2") if q1.blocks == (1, 1) else random_graph(q1, rng)
        triples.append((f, G0, G1))
    # classical vertex maps
    for (n0, src), tgt in itertools.product([(4, "C4"), (3, "C3"), (5, "C5")], ["K2", "K3", "T2"]):
        n1 = corpus.get(tgt).dim
        for phi in itertools.islice(itertools.product(range(n1), repeat=n0), 0, None, 7):
            triples.append((vertex_map_hom(phi, n1), corpus.get(src), corpus.get(tgt)))
    # witness homs and the toy model
    for G in RUT:
        f = disconnection_witness(G)
        if f is not None:
            triples.append((f, G, T2()))
        w = bipartition_witness(G)
        if w is not None:
            triples.append((w.hom, G, K2() if w.target == "K2" else K2_sqcup_T1()))
    triples.append((toy_four_coloring(), empty_graph(tracial_form([1, 1])), corpus.get("K4")))
    return triples


def test_c6_homomorphism_equivalences(acceptance):
    rng = np.random.default_rng(6)
    # t-hom conditions (Schur) and (orthogonality) agree
    triples = _t_hom_triples(rng)
    agree = hom_count = 0
    for f, G0, G1 in triples:
        s = is_t_homomorphism(f, G0, G1, condition="schur")
        o = is_t_homomorphism(f, G0, G1, condition="orthogonality")
        agree += s.is_hom == o.is_hom
        hom_count += s.is_hom
    cond_ok = agree == len(triples) and len(triples) >= 200

    # loc => graph hom corpus-wide, and equivalence under the tracial hypotheses
    loc_violations, equiv_fail, equiv_checked = [], [], 0
    small = [G for G in ALL if G.dim <= 16]
    for G in small:
        homs = [(identity_hom(G.qset), G, G)]
        if G.is_regular and G.is_undirected and G.is_tracial:
            f = disconnection_witness(G)
            if f is not None:
                homs.append((f, G, T2()))
            w = bipartition_witness(G)
            if w is not None:
                homs.append((w.hom, G, K2() if w.target == "K2" else K2_sqcup_T1()))
        for tgt in (K2(), T2(), K2_sqcup_T1()):
            for _ in range(2):
                homs.append((random_star_hom(rng, tgt.qset, G.qset), G, tgt))
        for f, G0, G1 in homs:
            rep = loc_vs_graph_hom_equivalence(f, G0, G1)
            if rep.loc_hom and not rep.graph_hom:
                loc_violations.append(G0.name)
            if rep.hypotheses["real"] and rep.hypotheses["tracial"] and rep.hypotheses["target_schur_central"]:
                equiv_checked += 1
                if rep.graph_hom != rep.loc_hom:
                    equiv_fail.append(f"{G0.name}->{G1.name}")
    classical = [G for G in small if is_classical(G) and G.dim <= 4]
    targets = [G for G in ALL if is_classical(G) and G.dim <= 3]
    for G0, G1 in itertools.product(classical, targets):
        for phi in itertools.product(range(G1.dim), repeat=G0.dim):
            rep = loc_vs_graph_hom_equivalence(vertex_map_hom(phi, G1.dim), G0, G1)
            equiv_checked += 1
            if rep.loc_hom and not rep.graph_hom:
                loc_violations.append(G0.name)
            if rep.graph_hom != rep.loc_hom:
                equiv_fail.append(f"{G0.name}->{G1.name} {phi}")

    # trivial-relation inclusion on 200 random star homomorphisms
    incl_pairs = [
        (tracial_form([1, 1]), tracial_form([2])),
        (tracial_form([2]), tracial_form([2, 2])),
        (tracial_form([1, 2]), tracial_form([3])),
        (tracial_form([1, 1]), make_quantum_set([2], [[1 / 3, 2 / 3]])),
        (make_quantum_set([2], [[1 / 3, 2 / 3]]), tracial_form([2, 2])),
    ]
    incl = 0
    for k in range(200):
        q1, q0 = incl_pairs[k % len(incl_pairs)]
        incl += verify_trivial_inclusion(random_star_hom(rng, q1, q0, k=1 + k % 2))
    incl_ok = incl == 200

    ok = cond_ok and not loc_violations and not equiv_fail and incl_ok
    acceptance("C6 homomorphism equivalences", ok,
               f"conditions agree {agree}/{len(triples)} ({hom_count} homs), "
               f"loc=>hom violations {len(loc_violations)}, equivalence {equiv_checked - len(equiv_fail)}/{equiv_checked}, "
               f"inclusion {incl}/200")
    assert ok


# ---------------------------------------------------------------------------

CONNECTED_RUT = [G for G in RUT if is_connected(G)]


def _five_way(G):
    return two_colorable(G, "loc")


def test_c7_two_colorability(acceptance):
    results = {G.name: _five_way(G) for G in CONNECTED_RUT}
    bad = [name for name, rep in results.items() if not rep.five_way_agree]
    f = toy_four_coloring()
    rep = injectivity_report(f)
    toy_ok = (is_t_homomorphism(f, empty_graph(tracial_form([1, 1])), corpus.get("K4")).is_hom
              and np.abs(rep.ff_dagger - 2 * np.eye(4)).max() <= 1e-12)
    ok = not bad and toy_ok
    acceptance("C7 five-way 2-colorability agreement and toy 4-coloring", ok,
               f"{len(results) - len(bad)}/{len(results)} connected graphs agree, toy model {toy_ok}"
               + (f"; disagree on {bad}, see decisions ledger" if bad else ""))
    # the single-vertex edgeless graph is tested separately below
    assert toy_ok
    assert [name for name in bad if name != "K1"] == []


@pytest.mark.xfail(strict=True, reason="A = 0 on C: loc-2-colorable with symmetric spectrum, but not bipartite")
def test_c7_single_vertex_empty_graph():
    rep = _five_way(corpus.get("K1"))
    assert rep.five_way_agree, rep.five_way


# ---------------------------------------------------------------------------


def test_c8_posneg_counterexample(acceptance):
    reports = []
    for q in (0.3, 0.5, 0.7):
        for frac in (0.5, 1.0):
            reports.append(verify_posneg_counterexample(q, frac * posneg_bound(q)))
    ok = all(r.y_plus_min_eig >= -1e-10 and r.y_minus_min_eig >= -1e-10 and abs(r.psi_xi) <= 1e-12
             and r.xi_norm > 0.1 for r in reports)
    worst = min(min(r.y_plus_min_eig, r.y_minus_min_eig) for r in reports)
    acceptance("C8 positive/negative decomposition counterexample", ok,
               f"6 cases, min eig {worst:.1e}, max |psi(xi)| {max(abs(r.psi_xi) for r in reports):.1e}, "
               f"min ||xi|| {min(r.xi_norm for r in reports):.3f}")
    assert ok


# ---------------------------------------------------------------------------


def test_c9_classical_soundness(acceptance):
    sources = []
    for n in (2, 3, 4, 5):
        sources += oracle.iso_classes(n, loops=n <= 3)
    targets = oracle.iso_classes(2, loops=True) + oracle.iso_classes(3, loops=True)
    homs = {}
    checked = mismatches = 0
    for A0 in sources:
        G0 = classical_graph(A0)
        for A1 in targets:
            G1 = classical_graph(A1)
            n0, n1 = len(A0), len(A1)
            for phi in itertools.product(range(n1), repeat=n0):
                f = homs.get((phi, n1))
                if f is None:
                    f = homs[(phi, n1)] = vertex_map_hom(phi, n1)
                checked += 1
                if is_graph_homomorphism(f, G0, G1).is_hom != oracle.is_hom(A0, A1, phi):
                    mismatches += 1
    ok = mismatches == 0
    acceptance("C9 classical soundness oracle", ok,
               f"{len(sources)} sources, {len(targets)} targets, {checked} vertex maps, {mismatches} mismatches")
    assert ok
