"""Spectra, gradient and Laplacian, and the spectral tests for connectedness and bipartiteness.

The connectedness and bipartiteness routines are only valid for regular
undirected graphs on tracial quantum sets; outside those hypotheses they
raise :class:`~qgraphs.errors.HypothesesNotMet` instead of guessing.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .errors import HypothesesNotMet, NotEigenvalue, NotReal, NotSelfAdjoint, ParamOutOfRange
from .homs import K2, T2, K2_sqcup_T1, StarHom, hom_from_projections, is_graph_homomorphism, is_injective_on, is_surjective
from .qalg import AlgebraElement, QuantumSet, SuperOp, Tolerance, _tol, comult_map, left_mult, rel_residual, right_mult
from .qgraph import QuantumGraph, iota_matrix

# ---------------------------------------------------------------------------
# Spectrum


def _cluster(values: np.ndarray, tol: float) -> list[tuple[complex, int]]:
    clusters: list[list[complex]] = []
    for v in sorted((complex(v) for v in values), key=lambda z: (z.real, z.imag)):
        for c in clusters:
            if abs(np.mean(c) - v) <= tol:
                c.append(v)
                break
        else:
            clusters.append([v])
    out = [(complex(np.mean(c)), len(c)) for c in clusters]
    return sorted(out, key=lambda cm: (cm[0].real, cm[0].imag))


def _null(M: np.ndarray, thr: float) -> np.ndarray:
    _, s, Vh = np.linalg.svd(M)
    return Vh[s <= thr].conj().T


@dataclass
class Spectrum:
    """Eigenvalues of ``A`` clustered at ``eig_tol``.

    ``multiplicities`` are algebraic (cluster sizes).  ``symmetric`` compares
    ``Spec`` with ``-Spec`` including multiplicities, ``symmetric_as_set``
    ignores them.
    """

    values: np.ndarray = field(repr=False)
    clusters: list[tuple[complex, int]]
    tol: float

    @property
    def eigenvalues(self) -> list[complex]:
        return [c for c, _ in self.clusters]

    @property
    def multiplicities(self) -> list[int]:
        return [m for _, m in self.clusters]

    @property
    def real_spectrum(self) -> bool:
        return all(abs(c.imag) <= self.tol for c, _ in self.clusters)

    def multiplicity(self, lam: complex) -> int:
        """Cluster size of the nearest cluster if within ``tol``, else 0."""
        if not self.clusters:
            return 0
        c, m = min(self.clusters, key=lambda cm: abs(cm[0] - lam))
        return m if abs(c - lam) <= self.tol else 0

    def contains(self, lam: complex) -> bool:
        return self.multiplicity(lam) > 0

    @property
    def symmetric_as_set(self) -> bool:
        return all(self.contains(-c) for c, _ in self.clusters)

    @property
    def symmetric(self) -> bool:
        return all(self.multiplicity(-c) == m for c, m in self.clusters)

    def as_sorted_list(self) -> list[complex]:
        out = []
        for c, m in self.clusters:
            out += [c] * m
        return out


def spectrum(G: QuantumGraph, tol: Tolerance | None = None) -> Spectrum:
    tol = _tol(tol) if tol is not None else G.tol
    A = G.A
    if np.allclose(A, A.conj().T, atol=1e-12 * max(1.0, np.abs(A).max())):
        vals = np.linalg.eigvalsh((A + A.conj().T) / 2).astype(complex)
    else:
        vals = np.linalg.eigvals(A)
    return Spectrum(vals, _cluster(vals, tol.eig_tol), tol.eig_tol)


def generalized_multiplicity(G: QuantumGraph, lam: complex, tol: Tolerance | None = None) -> int:
    """Dimension of ``ker (A - lam)^dim B``.

    Built as the increasing chain ``K_{j+1} = {x : (A - lam) x in K_j}``, each
    step a null space, which is stable where the matrix power is not.
    """
    tol = _tol(tol) if tol is not None else G.tol
    N = G.dim
    B = G.A - lam * np.eye(N)
    thr = tol.eig_tol * max(1.0, np.linalg.norm(G.A, 2))
    K = np.zeros((N, 0), dtype=complex)
    for _ in range(N):
        P = np.eye(N) - K @ K.conj().T
        nxt = _null(P @ B, thr)
        if nxt.shape[1] == K.shape[1]:
            break
        K = nxt
    return K.shape[1]


def spectral_radius(G: QuantumGraph) -> float:
    return float(np.max(np.abs(np.linalg.eigvals(G.A))))


def kms_weight(q: QuantumSet) -> np.ndarray:
    """Diagonal ``W`` with ``<x|y>_KMS = v_x^dagger W v_y``, i.e. ``sigma_{-i/2}``."""
    return q.modular_factors(-0.5j).real


def operator_norm(G: QuantumGraph, inner: str = "gns") -> float:
    """Largest singular value of ``A`` for the GNS or the KMS inner product."""
    A = G.A
    if inner.lower() == "gns":
        return float(np.linalg.norm(A, 2))
    if inner.lower() == "kms":
        w = np.sqrt(kms_weight(G.qset))
        return float(np.linalg.norm(w[:, None] * A / w[None, :], 2))
    raise ValueError("inner must be 'gns' or 'kms'")


def norm_hypotheses(G: QuantumGraph) -> dict:
    """Which sufficient condition for ``||A||_GNS = d`` holds."""
    dag_real = False
    if G.is_real:
        from .qgraph import schur_involution

        dag_real = G.adj.dagger.isclose(schur_involution(G.adj.dagger), G.tol)
    return {
        "undirected": G.is_undirected,
        "A_and_dagger_real": G.is_real and dag_real,
        "real_tracial": G.is_real and G.is_tracial,
    }


# ---------------------------------------------------------------------------
# Gradient and Laplacian


def gradient(G: QuantumGraph) -> SuperOp:
    """``nabla_A = delta^-2 (A^dagger (x) id - id (x) A) m^dagger``."""
    q, N = G.qset, G.dim
    I = np.eye(N)
    D = np.kron(G.A.conj().T, I) - np.kron(I, G.A)
    return SuperOp(q, 1, 2, D @ comult_map(q).matrix / q.delta_sq)


def degree_matrices(G: QuantumGraph) -> tuple[SuperOp, SuperOp]:
    """``D_in = lambda(A 1)`` and ``D_out = rho(A^dagger 1)``."""
    q = G.qset
    a1 = q.from_vector(G.A @ q.unit)
    ad1 = q.from_vector(G.A.conj().T @ q.unit)
    return left_mult(a1), right_mult(ad1)


def laplacian(G: QuantumGraph) -> SuperOp:
    """``nabla^dagger nabla``; equals ``delta^-2 (D_in - A + D_out - A^dagger)`` for real graphs."""
    if not G.is_real:
        raise NotReal("the Laplacian identity needs a real graph")
    g = gradient(G).matrix
    return SuperOp(G.qset, 1, 1, g.conj().T @ g)


def laplacian_closed_form(G: QuantumGraph) -> SuperOp:
    Din, Dout = degree_matrices(G)
    A = G.A
    return SuperOp(G.qset, 1, 1, (Din.matrix - A + Dout.matrix - A.conj().T) / G.qset.delta_sq)


def commutator_form(G: QuantumGraph, x: AlgebraElement) -> np.ndarray:
    """``[rho(x), A]`` as a matrix, to compare with ``delta^2 iota^-1(nabla x)``."""
    R = right_mult(x).matrix
    return R @ G.A - G.A @ R


def iota_inverse_of_gradient(G: QuantumGraph, x: AlgebraElement) -> np.ndarray:
    q, N = G.qset, G.dim
    v = gradient(G).matrix @ x.vector
    return np.linalg.solve(iota_matrix(q), v).reshape(N, N)


# ---------------------------------------------------------------------------
# Self-adjoint eigenvectors and spectral projections


def _kernel(G: QuantumGraph, lam: complex) -> np.ndarray:
    thr = G.tol.eig_tol * max(1.0, np.linalg.norm(G.A, 2))
    return _null(G.A - lam * np.eye(G.dim), thr)


def self_adjoint_part(x: AlgebraElement) -> AlgebraElement:
    """The larger of ``(x + x*)/2`` and ``(x - x*)/(2i)``."""
    re = (x + x.star()) * 0.5
    im = (x - x.star()) * (-0.5j)
    return re if re.norm2() >= im.norm2() else im


def sa_eigenvector(G: QuantumGraph, lam: float, rng: np.random.Generator | None = None) -> AlgebraElement:
    """Self-adjoint GNS-unit eigenvector for a real eigenvalue of a real graph.

    With ``rng`` a random combination of the eigenspace is used, otherwise
    the first kernel vector.
    """
    if not G.is_real:
        raise NotReal("self-adjoint eigenvectors are guaranteed for real graphs")
    K = _kernel(G, lam)
    if K.shape[1] == 0:
        raise NotEigenvalue(f"{lam} is not an eigenvalue within tolerance")
    if rng is None:
        c = np.zeros(K.shape[1])
        c[0] = 1
    else:
        c = rng.standard_normal(K.shape[1]) + 1j * rng.standard_normal(K.shape[1])
    x = self_adjoint_part(G.qset.from_vector(K @ c))
    return x * (1.0 / x.norm2())


def spectral_projections(x: AlgebraElement, tol: float = 1e-8) -> list[tuple[float, AlgebraElement]]:
    """Eigenvalue/projection pairs of a self-adjoint element, merged across blocks."""
    if not x.is_self_adjoint():
        raise NotSelfAdjoint("spectral projections need a self-adjoint element")
    q = x.owner
    parts = []
    for s, X in enumerate(x.blocks):
        w, V = np.linalg.eigh((X + X.conj().T) / 2)
        for k in range(len(w)):
            parts.append((w[k], s, V[:, k]))
    parts.sort(key=lambda t: t[0])
    groups: list[list] = []
    for p in parts:
        if groups and abs(p[0] - groups[-1][0][0]) <= tol:
            groups[-1].append(p)
        else:
            groups.append([p])
    out = []
    for g in groups:
        blocks = [np.zeros((n, n), dtype=complex) for n in q.blocks]
        for _, s, v in g:
            blocks[s] += np.outer(v, v.conj())
        out.append((float(np.mean([p[0] for p in g])), q.element(blocks)))
    return out


def snap_projection(x: AlgebraElement, tol: float = 1e-6) -> AlgebraElement | None:
    """Round eigenvalues within ``tol`` of 0 or 1; ``None`` if some eigenvalue is not close to either."""
    q = x.owner
    blocks = []
    for X in x.blocks:
        w, V = np.linalg.eigh((X + X.conj().T) / 2)
        if np.any(np.minimum(np.abs(w), np.abs(w - 1)) > tol):
            return None
        ones = np.abs(w - 1) <= tol
        blocks.append(V[:, ones] @ V[:, ones].conj().T)
    return q.element(blocks)


# ---------------------------------------------------------------------------
# Hypotheses


def _require_rut(G: QuantumGraph):
    failed = [name for name, ok in (("regular", G.is_regular), ("undirected", G.is_undirected),
                                    ("tracial", G.is_tracial)) if not ok]
    if failed:
        raise HypothesesNotMet(failed)
    return G.degree


def _is_zero(G):
    return np.linalg.norm(G.A) <= G.tol.eq_tol


def _minimal_projection(q: QuantumSet) -> AlgebraElement:
    return q.matrix_unit(0, 0, 0)


def _generic_sa_in_kernel(G: QuantumGraph, lam: float, rng: np.random.Generator, orth_to_one: bool = False):
    K = _kernel(G, lam)
    if orth_to_one:
        one = G.qset.unit
        K = K - np.outer(one, one.conj() @ K)
        K = scipy.linalg.orth(K)
    if K.shape[1] == 0:
        return None
    # self-adjoint parts of kernel vectors span the self-adjoint kernel
    q = G.qset
    sa = []
    for k in range(K.shape[1]):
        y = q.from_vector(K[:, k])
        sa += [(y + y.star()) * 0.5, (y - y.star()) * (-0.5j)]
    c = rng.standard_normal(len(sa))
    x = q.zero()
    for ck, y in zip(c, sa):
        x = x + y * ck
    return x * (1.0 / max(x.norm2(), 1e-300))


# ---------------------------------------------------------------------------
# Connectedness


def is_connected(G: QuantumGraph) -> bool:
    """``d`` is a simple eigenvalue (regular undirected tracial graphs)."""
    d = _require_rut(G)
    return spectrum(G).multiplicity(d) == 1


def disconnection_witness(G: QuantumGraph, rng: np.random.Generator | None = None) -> StarHom | None:
    """Surjective graph homomorphism ``G -> T2`` as ``f: C^2 -> B``, or ``None`` if connected.

    A generic self-adjoint ``x`` in ``ker(d - A)`` orthogonal to ``1`` is split
    by its top spectral projection.
    """
    d = _require_rut(G)
    if is_connected(G):
        return None
    q = G.qset
    rng = np.random.default_rng(0) if rng is None else rng
    if d <= G.tol.eig_tol:
        p = _minimal_projection(q)
    else:
        x = _generic_sa_in_kernel(G, d, rng, orth_to_one=True)
        p = snap_projection(spectral_projections(x)[-1][1])
        if p is None:
            raise AssertionError("spectral projection failed to snap to a projection")
    f = hom_from_projections(q, [p, q.one() - p])
    rep = is_graph_homomorphism(f, G, T2())
    if not (rep.is_hom and is_surjective(f)):
        raise AssertionError(f"disconnection witness failed verification: {rep}")
    return f


# ---------------------------------------------------------------------------
# Bipartiteness


def minus_d_condition(G: QuantumGraph) -> bool:
    """``-d in Spec A``, with the requirement ``dim B >= 2`` when ``d = 0``."""
    d = _require_rut(G)
    if abs(d) <= G.tol.eig_tol:
        return G.dim >= 2
    return spectrum(G).contains(-d)


def has_bipartite_component(G: QuantumGraph) -> bool:
    return minus_d_condition(G)


@dataclass
class BipartitionWitness:
    x_plus: AlgebraElement
    x_minus: AlgebraElement
    target: str  # "K2" or "K2_sqcup_T1"
    hom: StarHom = field(repr=False)


def bipartition_witness(G: QuantumGraph, x: AlgebraElement | None = None,
                        rng: np.random.Generator | None = None) -> BipartitionWitness | None:
    """Projections ``x_+, x_-`` with ``A x_+- = d x_-+``, and the homomorphism they define.

    ``x`` may be supplied as a self-adjoint element of ``ker(d + A)``; by
    default a generic one is drawn.  ``x_+`` and ``x_-`` are the sums of
    spectral projections of ``x`` for positive and negative eigenvalues.
    The target is ``K2`` when they sum to ``1`` and ``K2 + T1`` otherwise.
    Returns ``None`` if ``-d`` is not an eigenvalue.
    """
    d = _require_rut(G)
    if not minus_d_condition(G):
        return None
    q = G.qset
    one = q.one()
    if abs(d) <= G.tol.eig_tol:
        xp = _minimal_projection(q)
        xm = one - xp
    else:
        if x is None:
            rng = np.random.default_rng(0) if rng is None else rng
            x = _generic_sa_in_kernel(G, -d, rng)
        elif rel_residual(G.A @ x.vector, -d * x.vector) > 1e-8:
            raise NotEigenvalue("supplied x is not in ker(d + A)")
        scale = max(abs(lam) for lam, _ in spectral_projections(x))
        pos = [p for lam, p in spectral_projections(x) if lam > 1e-6 * scale]
        neg = [p for lam, p in spectral_projections(x) if lam < -1e-6 * scale]
        xp = snap_projection(sum(pos[1:], pos[0]))
        xm = snap_projection(sum(neg[1:], neg[0]))
        if xp is None or xm is None:
            raise AssertionError("candidate projections failed to snap")
    for a, b in ((xp, xm), (xm, xp)):
        if rel_residual(G.A @ a.vector, d * b.vector) > 1e-8:
            raise AssertionError("A x_+- != d x_-+ for the constructed witness")
    rest = one - xp - xm
    if rest.norm2() <= 1e-8:
        f = hom_from_projections(q, [xp, xm])
        rep = is_graph_homomorphism(f, G, K2())
        ok = rep.is_hom and is_surjective(f)
        target = "K2"
    else:
        f = hom_from_projections(q, [xp, xm, rest])
        rep = is_graph_homomorphism(f, G, K2_sqcup_T1())
        ok = rep.is_hom and is_injective_on(f, [0, 1])
        target = "K2_sqcup_T1"
    if not ok:
        raise AssertionError(f"bipartition witness failed verification: {rep}")
    return BipartitionWitness(xp, xm, target, f)


def is_bipartite(G: QuantumGraph) -> bool:
    """Surjective graph homomorphism to ``K2`` exists.

    Connected graphs: ``-d in Spec A``.  In general the positive and negative
    spectral parts of a generic self-adjoint element of ``ker(d + A)`` sum to
    ``1`` exactly when such a homomorphism exists.
    """
    _require_rut(G)
    if is_connected(G):
        return minus_d_condition(G)
    w = bipartition_witness(G)
    return w is not None and w.target == "K2"


# ---------------------------------------------------------------------------
# Positive/negative decomposition counterexample


@dataclass
class PosNegReport:
    q: float
    alpha: float
    bound: float
    y_plus_min_eig: float
    y_minus_min_eig: float
    psi_xi: complex
    xi_norm: float
    x_orthogonal_projections: bool
    det_y_plus: float

    @property
    def passes(self) -> bool:
        return (self.y_plus_min_eig >= -1e-10 and self.y_minus_min_eig >= -1e-10 and abs(self.psi_xi) <= 1e-12
                and self.xi_norm > 0 and self.x_orthogonal_projections)


def posneg_bound(q: float) -> float:
    return (1.0 / q - q) ** 2 / 4


def verify_posneg_counterexample(q: float = 0.5, alpha: float = 0.5) -> PosNegReport:
    """Positive decompositions of one self-adjoint element that differ despite equal state values.

    On ``M_2`` with the state ``Tr(u* Q u .)``, ``Q = diag(1, q^2)/(1 + q^2)``
    and ``u`` the rotation by 45 degrees, the matrix units ``x_+ = E11``,
    ``x_- = E22`` and ``y_+- = x_+- + xi`` with ``xi = alpha [[1, c], [c, 1]]``,
    ``c = (1 + q^2)/(1 - q^2)``, are positive with ``psi(xi) = 0``.
    """
    if not 0 < q < 1:
        raise ParamOutOfRange("q must lie in (0, 1)")
    bound = posneg_bound(q)
    if not 0 < alpha <= bound * (1 + 1e-12):
        raise ParamOutOfRange(f"alpha must lie in (0, {bound}]")
    Q = np.diag([1.0, q * q]) / (1 + q * q)
    u = np.array([[1.0, -1.0], [1.0, 1.0]]) / np.sqrt(2)
    rho = u.conj().T @ Q @ u
    c = (1 + q * q) / (1 - q * q)
    xp, xm = np.diag([1.0, 0.0]), np.diag([0.0, 1.0])
    xi = alpha * np.array([[1.0, c], [c, 1.0]])
    yp, ym = xp + xi, xm + xi
    orth = bool(np.allclose(xp @ xm, 0) and np.allclose(xp @ xp, xp) and np.allclose(xm @ xm, xm))
    return PosNegReport(
        q=q,
        alpha=alpha,
        bound=bound,
        y_plus_min_eig=float(np.linalg.eigvalsh(yp).min()),
        y_minus_min_eig=float(np.linalg.eigvalsh(ym).min()),
        psi_xi=complex(np.trace(rho @ xi)),
        xi_norm=float(np.linalg.norm(xi, 2)),
        x_orthogonal_projections=orth,
        det_y_plus=float(np.linalg.det(yp)),
    )
