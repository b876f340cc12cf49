import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qgraphs import corpus
from qgraphs.errors import HypothesesNotMet, NotEigenvalue, NotReal, NotSelfAdjoint, ParamOutOfRange
from qgraphs.homs import K2, T2, is_graph_homomorphism, is_surjective, pushforward
from qgraphs.qalg import random_element, random_quantum_set, tracial_form
from qgraphs.qgraph import bipartite_double, classical_digraph, disjoint_union, empty_graph, random_graph
from qgraphs.spectral import (
    bipartition_witness,
    commutator_form,
    degree_matrices,
    disconnection_witness,
    generalized_multiplicity,
    gradient,
    has_bipartite_component,
    iota_inverse_of_gradient,
    is_bipartite,
    is_connected,
    laplacian,
    laplacian_closed_form,
    minus_d_condition,
    norm_hypotheses,
    operator_norm,
    posneg_bound,
    sa_eigenvector,
    snap_projection,
    spectral_projections,
    spectral_radius,
    spectrum,
    verify_posneg_counterexample,
)
from qgraphs.qalg import left_mult, mult_map, right_mult, tensor

M2G = corpus.get("m2_nonorientable")
REGULAR = [G for G in corpus.all_graphs() if G.is_regular]
RUT = [G for G in REGULAR if G.is_undirected and G.is_tracial]


def _names(graphs):
    return [G.name for G in graphs]


# -- spectra and norms --------------------------------------------------------


@pytest.mark.parametrize(
    "name, values",
    [
        ("m2_nonorientable", [-1, -1, 1, 1]),
        ("K_M2", [-1, -1, -1, 3]),
        ("C4", [-2, 0, 0, 2]),
        ("K2xK2", [-1, -1, 1, 1]),
    ],
)
def test_golden_spectra(name, values):
    sp = spectrum(corpus.get(name))
    np.testing.assert_allclose(np.real(sp.as_sorted_list()), values, atol=1e-10)
    assert sp.real_spectrum


def test_spectrum_multiplicities():
    sp = spectrum(M2G)
    assert sp.multiplicity(1) == 2 and sp.multiplicity(-1) == 2 and sp.multiplicity(0) == 0
    assert sp.symmetric and sp.symmetric_as_set
    assert not spectrum(corpus.get("C5")).symmetric_as_set


def test_nontracial_complete_norms():
    G = corpus.get("K_M2_nontracial")
    assert G.degree == pytest.approx(3.5)
    assert operator_norm(G, "kms") == pytest.approx(3.5, rel=1e-10)
    assert spectral_radius(G) == pytest.approx(3.5, rel=1e-10)


@pytest.mark.parametrize("G", REGULAR, ids=_names(REGULAR))
def test_radius_and_norms(G):
    d = G.degree
    assert abs(spectral_radius(G) - d) <= 1e-8 * max(1, d)
    if G.is_real:
        assert operator_norm(G, "kms") == pytest.approx(d, abs=1e-8 * max(1, d))
    if any(norm_hypotheses(G).values()):
        assert operator_norm(G, "gns") == pytest.approx(d, abs=1e-8 * max(1, d))


@pytest.mark.parametrize("G", RUT, ids=_names(RUT))
def test_spectrum_bounds(G):
    d = G.degree
    w = np.linalg.eigvalsh(G.A)
    assert w.min() >= -d - 1e-9 and w.max() <= d + 1e-9
    if G.is_reflexive:
        assert w.min() >= -d + 2 - 1e-9


def test_reflexive_spectrum_bound_example():
    G = corpus.get("T_M2")
    w = np.linalg.eigvalsh(G.A)
    assert w.min() >= -G.degree + 2 - 1e-12


def test_norm_unknown_inner():
    with pytest.raises(ValueError):
        operator_norm(M2G, "hs")


def test_generalized_multiplicity_directed():
    G = classical_digraph(3, [(0, 1), (1, 2)])
    assert generalized_multiplicity(G, 0) == 3
    assert spectrum(G).multiplicity(0) == 3


# -- gradient and Laplacian ---------------------------------------------------


def coboundary_oracle(n, edges, x):
    """Classical coboundary in algebra coordinates: (i, j) -> x_j - x_i on edges i -> j."""
    out = np.zeros((n, n))
    for i, j in edges:
        out[i, j] = x[j] - x[i]
    return out


@pytest.mark.parametrize("seed", range(12))
def test_classical_gradient(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 7))
    edges = [(i, j) for i in range(n) for j in range(n) if rng.random() < 0.4]
    G = classical_digraph(n, edges)
    x = rng.standard_normal(n)
    got = (gradient(G).matrix @ (x / np.sqrt(n))).reshape(n, n) * n
    np.testing.assert_allclose(got, coboundary_oracle(n, edges, x), atol=1e-10)


def _real_graphs(seed, count):
    rng = np.random.default_rng(seed)
    profs = [[2], [1, 2], [1, 1], [2, 2], [3]]
    out = []
    for k in range(count):
        b = profs[k % len(profs)]
        q = tracial_form(b) if k % 3 == 0 else random_quantum_set(rng, b)
        out.append(random_graph(q, rng))
    return out


@pytest.mark.parametrize("G", _real_graphs(10, 8), ids=lambda G: str(list(G.qset.blocks)))
def test_commutator_identity(G, rng):
    for _ in range(5):
        x = random_element(rng, G.qset)
        lhs = G.qset.delta_sq * iota_inverse_of_gradient(G, x)
        np.testing.assert_allclose(lhs, commutator_form(G, x), atol=1e-9 * max(1, np.abs(lhs).max()))


@pytest.mark.parametrize("G", _real_graphs(11, 8), ids=lambda G: str(list(G.qset.blocks)))
def test_leibniz(G, rng):
    q = G.qset
    x, y = random_element(rng, q), random_element(rng, q)
    g = gradient(G).matrix
    I = np.eye(q.dim)
    lhs = g @ (x * y).vector
    rhs = np.kron(I, right_mult(y).matrix) @ (g @ x.vector) + np.kron(left_mult(x).matrix, I) @ (g @ y.vector)
    assert np.linalg.norm(lhs - rhs) <= 1e-9 * max(1, np.linalg.norm(lhs))


@pytest.mark.parametrize("G", _real_graphs(12, 8) + RUT[:6], ids=lambda G: G.name or str(list(G.qset.blocks)))
def test_laplacian_psd_and_closed_form(G):
    L = laplacian(G)
    assert np.linalg.eigvalsh((L.matrix + L.matrix.conj().T) / 2).min() >= -1e-9
    assert L.isclose(laplacian_closed_form(G))


@pytest.mark.parametrize("G", RUT, ids=_names(RUT))
def test_laplacian_kernel_contains_unit(G):
    L = laplacian(G).matrix
    assert np.linalg.norm(L @ G.qset.unit) <= 1e-9 * max(1, np.linalg.norm(L))


@pytest.mark.parametrize("name, values", [("C4", [0, 1, 1, 2]), ("m2_nonorientable", [0, 0, 1, 1])])
def test_laplacian_golden(name, values):
    w = np.linalg.eigvalsh(laplacian(corpus.get(name)).matrix)
    np.testing.assert_allclose(w, values, atol=1e-12)


def test_degree_matrices_regular():
    G = corpus.get("K_M2_nontracial")
    Din, Dout = degree_matrices(G)
    np.testing.assert_allclose(Din.matrix, G.degree * np.eye(4), atol=1e-12)
    np.testing.assert_allclose(Dout.matrix, G.degree * np.eye(4), atol=1e-12)


def non_real_graph():
    """Schur idempotent from a non-Hermitian idempotent of M_2^op (x) M_2."""
    from qgraphs.qgraph import EdgeProjection, QuantumGraph, superop_of_edge_projection

    q = tracial_form([2])
    v, w = np.array([1.0, 0, 0, 0]), np.array([1.0, 1.0, 0, 0])
    ep = EdgeProjection(q, (np.outer(v, w),))
    return QuantumGraph(q, superop_of_edge_projection(ep))


def test_laplacian_needs_real():
    G = non_real_graph()
    assert G.is_schur_idempotent and not G.is_real
    with pytest.raises(NotReal):
        laplacian(G)
    with pytest.raises(NotReal):
        sa_eigenvector(G, 0.0)


@pytest.mark.parametrize("G", [G for G in REGULAR if G.is_real], ids=lambda G: G.name)
def test_hermitian_part_bound(G, rng):
    for theta in np.exp(1j * rng.uniform(0, 2 * np.pi, 4)):
        H = (theta * G.A + np.conj(theta) * G.A.conj().T) / 2
        assert np.linalg.eigvalsh(H).max() <= G.degree + 1e-9


# -- eigenvectors and projections ---------------------------------------------


def test_sa_eigenvector_m2(rng):
    x = sa_eigenvector(M2G, -1.0, rng)
    assert x.is_self_adjoint()
    X = x.blocks[0]
    assert abs(X[0, 0]) < 1e-12 and abs(X[1, 1]) < 1e-12
    np.testing.assert_allclose(M2G.A @ x.vector, -x.vector, atol=1e-12)


def test_sa_eigenvector_degree_and_c4():
    G = corpus.get("K_M2_nontracial")
    x = sa_eigenvector(G, G.degree)
    np.testing.assert_allclose(x.vector / x.vector[0], G.qset.unit / G.qset.unit[0], atol=1e-10)
    v = sa_eigenvector(corpus.get("C4"), -2.0).vector
    np.testing.assert_allclose(v / v[0], [1, -1, 1, -1], atol=1e-12)
    with pytest.raises(NotEigenvalue):
        sa_eigenvector(M2G, 0.5)


def test_spectral_projection_examples():
    q = tracial_form([2])
    x = q.element([np.array([[0, 1], [1, 0]])])
    (lm, pm), (lp, pp) = spectral_projections(x)
    assert (lm, lp) == pytest.approx((-1, 1))
    np.testing.assert_allclose(pp.blocks[0], (np.eye(2) + x.blocks[0]) / 2, atol=1e-12)
    np.testing.assert_allclose(pm.blocks[0], (np.eye(2) - x.blocks[0]) / 2, atol=1e-12)
    [(l1, p1)] = spectral_projections(q.one())
    assert l1 == pytest.approx(1) and np.allclose(p1.blocks[0], np.eye(2))
    c3 = tracial_form([1, 1, 1])
    (l3, p3), (l5, p5) = spectral_projections(c3.element([[[3]], [[3]], [[5]]]))
    assert (l3, l5) == pytest.approx((3, 5))
    np.testing.assert_allclose(p3.vector / np.sqrt(3), [1 / 3, 1 / 3, 0], atol=1e-12)
    with pytest.raises(NotSelfAdjoint):
        spectral_projections(q.element([np.array([[0, 1], [0, 0]])]))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**31 - 1))
def test_spectral_projections_resolve_identity(seed):
    rng = np.random.default_rng(seed)
    q = random_quantum_set(rng, [1, 2, 3])
    x = random_element(rng, q, self_adjoint=True)
    parts = spectral_projections(x)
    total = sum((p for _, p in parts[1:]), parts[0][1])
    np.testing.assert_allclose(total.vector, q.unit, atol=1e-10)
    recon = sum((p * lam for lam, p in parts[1:]), parts[0][1] * parts[0][0])
    np.testing.assert_allclose(recon.vector, x.vector, atol=1e-9)


def test_snap_projection():
    q = tracial_form([2])
    assert snap_projection(q.element([np.diag([1 + 1e-9, 1e-9])])) is not None
    assert snap_projection(q.element([np.diag([0.5, 0.0])])) is None


# -- connectedness and bipartiteness ------------------------------------------


def test_m2_verdicts():
    assert not is_connected(M2G)
    f = disconnection_witness(M2G)
    assert is_graph_homomorphism(f, M2G, T2()).is_hom and is_surjective(f)
    assert has_bipartite_component(M2G) and is_bipartite(M2G)
    x = M2G.qset.element([np.array([[0, 1], [1, 0]])])
    w = bipartition_witness(M2G, x=x)
    np.testing.assert_allclose(w.x_plus.blocks[0], 0.5 * np.ones((2, 2)), atol=1e-12)
    np.testing.assert_allclose(w.x_minus.blocks[0], 0.5 * np.array([[1, -1], [-1, 1]]), atol=1e-12)
    np.testing.assert_allclose(pushforward(w.hom, M2G).matrix, [[0, 1], [1, 0]], atol=1e-12)


@pytest.mark.parametrize(
    "name, connected, bipartite",
    [
        ("K_M2", True, False),
        ("T2", False, False),
        ("C3+C3", False, False),
        ("C4", True, True),
        ("C3", True, False),
        ("C4+C6", False, True),
        ("K2+m2", False, True),
        ("Petersen", True, False),
        ("double_K3", True, True),
        ("T1", True, False),
    ],
)
def test_verdict_table(name, connected, bipartite):
    G = corpus.get(name)
    assert is_connected(G) == connected
    assert is_bipartite(G) == bipartite


def test_disconnected_with_odd_component():
    # 2-regular, -2 in the spectrum from C4, but C3 blocks a surjection onto K2
    G = disjoint_union(corpus.get("C4"), corpus.get("C3"))
    assert G.degree == pytest.approx(2.0)
    assert has_bipartite_component(G) and not is_bipartite(G)
    w = bipartition_witness(G)
    assert w.target == "K2_sqcup_T1"


@pytest.mark.parametrize("G", RUT, ids=_names(RUT))
def test_witness_soundness(G):
    f = disconnection_witness(G)
    assert (f is None) == is_connected(G)
    if f is not None:
        assert is_graph_homomorphism(f, G, T2()).is_hom and is_surjective(f)
        # spectral projections of a kernel element stay in the kernel
        p = G.qset.from_vector(f.matrix[:, 0] / np.sqrt(2))
        np.testing.assert_allclose(G.A @ p.vector, G.degree * p.vector, atol=1e-8)
    w = bipartition_witness(G)
    assert (w is not None) == minus_d_condition(G)
    if w is not None and w.target == "K2":
        assert is_graph_homomorphism(w.hom, G, K2()).is_hom and is_surjective(w.hom)


@pytest.mark.parametrize("name", ["K3", "C5", "K_M2", "Petersen"])
def test_double_has_minus_d(name):
    D = bipartite_double(corpus.get(name))
    assert spectrum(D).contains(-D.degree)
    assert is_bipartite(D)


def test_hypotheses_refused():
    for name, failed in (("K_M2_nontracial", ["tracial"]), ("P3", ["regular"]), ("directed_C3", ["undirected"])):
        with pytest.raises(HypothesesNotMet) as exc:
            is_connected(corpus.get(name))
        assert exc.value.failed == failed


def test_zero_degree_caveat():
    q = tracial_form([1, 1])
    G = empty_graph(q)
    assert minus_d_condition(G) and is_bipartite(G) and not is_connected(G)
    assert not minus_d_condition(empty_graph(tracial_form([1])))


# -- positive/negative decomposition -------------------------------------------


@pytest.mark.parametrize("q", [0.3, 0.5, 0.7])
@pytest.mark.parametrize("frac", [0.5, 1.0])
def test_posneg_counterexample(q, frac):
    rep = verify_posneg_counterexample(q, frac * posneg_bound(q))
    assert rep.passes
    assert rep.y_plus_min_eig >= -1e-10 and rep.y_minus_min_eig >= -1e-10
    assert abs(rep.psi_xi) <= 1e-12 and rep.xi_norm > 0.1


def test_posneg_boundary_determinant():
    rep = verify_posneg_counterexample(0.5, 0.5625)
    assert rep.bound == pytest.approx(0.5625)
    assert abs(rep.det_y_plus) <= 1e-12
    assert verify_posneg_counterexample(0.5, 1e-9).xi_norm < 1e-8


def test_posneg_range_checks():
    with pytest.raises(ParamOutOfRange):
        verify_posneg_counterexample(1.2, 0.1)
    with pytest.raises(ParamOutOfRange):
        verify_posneg_counterexample(0.5, 0.7)
