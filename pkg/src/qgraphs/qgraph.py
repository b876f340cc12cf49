"""Schur-product calculus, quantum graphs and their three encodings.

A quantum graph is a quantum set with a Schur-idempotent adjacency operator
``A``.  Real graphs correspond bijectively to

* projections ``p_A`` in ``B^op (x) B`` (:class:`EdgeProjection`), and
* ``B``-``B``-bimodule projections ``P_A`` on ``B (x) B`` (:class:`BimoduleProjection`).

``B^op (x) B`` is realised concretely as ``sum_{s,t} M_{n_s n_t}`` by
transposing the first tensor factor (transpose is a *-isomorphism
``B^op -> B``), so edge projections are lists of ordinary Hermitian blocks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

from .errors import (
    NotBimodule,
    NotProjection,
    NotReal,
    NotSchurIdempotent,
    OwnerMismatch,
)
from .qalg import (
    QuantumSet,
    SuperOp,
    Tolerance,
    _tol,
    close,
    default_tolerance,
    direct_sum_qset,
    rel_residual,
    tensor_qset,
    tracial_form,
)

# ---------------------------------------------------------------------------
# Schur product and involution


def _check_endo(*ops):
    q = ops[0].owner
    for T in ops:
        if T.owner != q:
            raise OwnerMismatch("superoperators act on different quantum sets")
        if (T.in_arity, T.out_arity) != (1, 1):
            raise ValueError("Schur calculus is defined for maps B -> B")
    return q


def schur_matrix(q: QuantumSet, S: np.ndarray, T: np.ndarray) -> np.ndarray:
    M = q.mult_tensor
    X = np.tensordot(M, S, axes=([1], [0]))  # a c d
    Y = np.tensordot(X, T, axes=([1], [0]))  # a d e
    return np.tensordot(Y, M, axes=([1, 2], [1, 2])) / q.delta_sq


def schur_product(S: SuperOp, T: SuperOp) -> SuperOp:
    """``S . T = delta^-2 m (S (x) T) m^dagger``."""
    q = _check_endo(S, T)
    return SuperOp(q, 1, 1, schur_matrix(q, S.matrix, T.matrix))


def schur_involution(T: SuperOp) -> SuperOp:
    """``T* = (T((.)*))*``."""
    q = _check_endo(T)
    K = q.star_matrix
    return SuperOp(q, 1, 1, K @ T.matrix.conj() @ K)


def left_schur_matrix(A: SuperOp) -> np.ndarray:
    """Matrix of ``T -> A . T`` acting on row-major ``vec(T)``."""
    q = _check_endo(A)
    N, M = q.dim, q.mult_tensor
    X = np.tensordot(M, A.matrix, axes=([1], [0]))  # a c d
    L = np.tensordot(X, M, axes=([2], [1]))  # a c f e
    return L.transpose(0, 2, 1, 3).reshape(N * N, N * N) / q.delta_sq


def right_schur_matrix(A: SuperOp) -> np.ndarray:
    """Matrix of ``T -> T . A`` acting on row-major ``vec(T)``."""
    q = _check_endo(A)
    N, M = q.dim, q.mult_tensor
    X = np.tensordot(M, A.matrix, axes=([2], [0]))  # a b e
    L = np.tensordot(X, M, axes=([2], [2]))  # a b f d
    return L.transpose(0, 2, 1, 3).reshape(N * N, N * N) / q.delta_sq


def reflexive_complete_matrix(q: QuantumSet) -> np.ndarray:
    """``J = delta^2 psi(.) 1``, the Schur unit."""
    return q.delta_sq * np.outer(q.unit, q.unit.conj())


def numerical_rank(X: np.ndarray, rel: float) -> int:
    s = np.linalg.svd(X, compute_uv=False)
    if s.size == 0 or s[0] == 0:
        return 0
    return int(np.sum(s > rel * s[0]))


# ---------------------------------------------------------------------------
# B^op (x) B


@lru_cache(maxsize=64)
def _pair_layout(q: QuantumSet):
    """Where each GNS pair coordinate ``(a, b)`` lands in ``sum M_{n_s n_t}``."""
    N = q.dim
    sizes = []
    index = {}
    for s, n in enumerate(q.blocks):
        for t, m in enumerate(q.blocks):
            index[(s, t)] = len(sizes)
            sizes.append(n * m)
    blk = np.empty(N * N, dtype=int)
    row = np.empty(N * N, dtype=int)
    col = np.empty(N * N, dtype=int)
    scale = np.empty(N * N)
    lab = q.index
    for a, (s, i, j) in enumerate(lab):
        for b, (t, k, l) in enumerate(lab):
            m = q.blocks[t]
            pos = a * N + b
            blk[pos] = index[(s, t)]
            row[pos] = j * m + k
            col[pos] = i * m + l
            scale[pos] = 1.0 / np.sqrt(q.density[s][j] * q.density[t][l])
    return tuple(sizes), blk, row, col, scale


def pair_coords_to_blocks(q: QuantumSet, v: np.ndarray) -> list[np.ndarray]:
    sizes, blk, row, col, scale = _pair_layout(q)
    out = [np.zeros((n, n), dtype=complex) for n in sizes]
    for k in range(len(sizes)):
        sel = blk == k
        out[k][row[sel], col[sel]] = v[sel] * scale[sel]
    return out


def blocks_to_pair_coords(q: QuantumSet, blocks) -> np.ndarray:
    sizes, blk, row, col, scale = _pair_layout(q)
    v = np.empty(q.dim**2, dtype=complex)
    for k in range(len(sizes)):
        sel = blk == k
        v[sel] = np.asarray(blocks[k])[row[sel], col[sel]] / scale[sel]
    return v


@dataclass(frozen=True, eq=False)
class EdgeProjection:
    """Element of ``B^op (x) B`` stored blockwise over pairs of blocks ``(s, t)``."""

    qset: QuantumSet
    blocks: tuple[np.ndarray, ...] = field(repr=False)

    def is_projection(self, tol: Tolerance | None = None) -> bool:
        tol = _tol(tol)
        return all(close(p, p.conj().T, tol) and close(p @ p, p, tol) for p in self.blocks)

    def rank(self, tol: Tolerance | None = None) -> int:
        tol = _tol(tol)
        return sum(numerical_rank(p, tol.eig_tol) for p in self.blocks if p.size and np.any(p))

    def block_ranks(self, tol: Tolerance | None = None) -> list[int]:
        tol = _tol(tol)
        return [numerical_rank(p, tol.eig_tol) if np.any(p) else 0 for p in self.blocks]

    def is_central(self, tol: Tolerance | None = None) -> bool:
        tol = _tol(tol)
        return all(close(p, p[0, 0] * np.eye(len(p)), tol) for p in self.blocks)

    def __matmul__(self, other):
        return EdgeProjection(self.qset, tuple(a @ b for a, b in zip(self.blocks, other.blocks)))

    @property
    def matrix(self) -> np.ndarray:
        """Single matrix; only meaningful when there is one pair block (one matrix block in B)."""
        if len(self.blocks) != 1:
            raise ValueError("edge projection has several blocks; use .blocks")
        return self.blocks[0]


def _sqrt_comult_unit(q: QuantumSet) -> np.ndarray:
    # (sigma_{i/2} (x) id) m^dagger 1 reshaped to N x N
    N = q.dim
    W = (q.mult_tensor.reshape(N, N * N).T @ q.unit).reshape(N, N)
    return q.modular_factors(0.5j)[:, None] * W


def edge_projection_of(T: SuperOp) -> EdgeProjection:
    """``p_T = delta^-2 (sigma_{i/2} (x) T) m^dagger 1`` for any ``T: B -> B``."""
    q = _check_endo(T)
    P = _sqrt_comult_unit(q) @ T.matrix.T / q.delta_sq
    return EdgeProjection(q, tuple(pair_coords_to_blocks(q, P.reshape(-1))))


def superop_of_edge_projection(ep: EdgeProjection) -> SuperOp:
    q = ep.qset
    N = q.dim
    P = blocks_to_pair_coords(q, ep.blocks).reshape(N, N) * q.delta_sq
    return SuperOp(q, 1, 1, np.linalg.solve(_sqrt_comult_unit(q), P).T)


# ---------------------------------------------------------------------------
# Edge space: iota and bimodule projections


def iota_matrix(q: QuantumSet) -> np.ndarray:
    """Matrix of ``iota: B(L^2 B) -> B (x) B`` on row-major ``vec(T)``.

    ``iota(|x><y|) = sigma_{-i}(y*) (x) x``.
    """
    N = q.dim
    D = q.modular_factors(-1j)[:, None] * q.star_matrix
    return np.einsum("cb,xa->cxab", D, np.eye(N)).reshape(N * N, N * N)


def iota(T: SuperOp) -> np.ndarray:
    q = _check_endo(T)
    return iota_matrix(q) @ T.matrix.reshape(-1)


def iota_inverse(q: QuantumSet, xi: np.ndarray) -> SuperOp:
    N = q.dim
    return SuperOp(q, 1, 1, np.linalg.solve(iota_matrix(q), xi).reshape(N, N))


def edge_inner(S: SuperOp, T: SuperOp) -> complex:
    """``<S|T> = <iota S | iota T>`` on ``B(L^2(B, psi))``."""
    return complex(np.vdot(iota(S), iota(T)))


def edge_gram(q: QuantumSet) -> np.ndarray:
    Io = iota_matrix(q)
    return Io.conj().T @ Io


@dataclass(frozen=True, eq=False)
class BimoduleProjection:
    qset: QuantumSet
    P: SuperOp = field(repr=False)

    def is_projection(self, tol: Tolerance | None = None) -> bool:
        P = self.P.matrix
        return close(P, P.conj().T, tol) and close(P @ P, P, tol)

    def bimodule_residual(self, rng: np.random.Generator | None = None, probes: int = 5) -> float:
        """Largest relative residual of ``P(x xi y) = x P(xi) y`` on random probes."""
        from .qalg import left_mult, random_element, right_mult

        rng = np.random.default_rng(0) if rng is None else rng
        q, P = self.qset, self.P.matrix
        N = q.dim
        worst = 0.0
        for _ in range(probes):
            x, y = random_element(rng, q), random_element(rng, q)
            xi = rng.standard_normal(N * N) + 1j * rng.standard_normal(N * N)
            act = np.kron(left_mult(x).matrix, right_mult(y).matrix)
            worst = max(worst, rel_residual(P @ (act @ xi), act @ (P @ xi)))
        return worst

    @property
    def edge_space_dim(self) -> int:
        return numerical_rank(self.P.matrix, 1e-9)


def bimodule_projection_of(A: SuperOp) -> BimoduleProjection:
    """``P_A = iota o (A . -) o iota^-1``."""
    q = _check_endo(A)
    Io = iota_matrix(q)
    P = Io @ left_schur_matrix(A) @ np.linalg.inv(Io)
    return BimoduleProjection(q, SuperOp(q, 2, 2, P))


def adjacency_of_bimodule(P: BimoduleProjection) -> SuperOp:
    """``A_P = delta^2 (psi (x) id) P (. (x) 1)``."""
    q = P.qset
    N = q.dim
    close_left = np.kron(q.unit.conj()[None, :], np.eye(N))
    feed_right = np.kron(np.eye(N), q.unit[:, None])
    return SuperOp(q, 1, 1, q.delta_sq * close_left @ P.P.matrix @ feed_right)


# ---------------------------------------------------------------------------
# Quantum graphs


@dataclass(frozen=True, eq=False)
class QuantumGraph:
    """``(B, psi, A)`` with ``A . A = A``.

    Only Schur idempotence is validated on construction; every other
    predicate is computed on first access and cached.
    """

    qset: QuantumSet
    adj: SuperOp = field(repr=False)
    name: str = ""
    tol: Tolerance = field(default_factory=default_tolerance, repr=False, compare=False)
    validate: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self):
        _check_endo(self.adj)
        if self.adj.owner != self.qset:
            raise OwnerMismatch("adjacency operator lives on a different quantum set")
        if self.validate:
            r = rel_residual(schur_matrix(self.qset, self.adj.matrix, self.adj.matrix), self.adj.matrix)
            if r > self.tol.eq_tol * 10:
                raise NotSchurIdempotent(f"A . A != A (relative residual {r:.3e})")

    @property
    def A(self) -> np.ndarray:
        return self.adj.matrix

    @property
    def dim(self) -> int:
        return self.qset.dim

    @cached_property
    def is_real(self) -> bool:
        return self.adj.isclose(schur_involution(self.adj), self.tol)

    @cached_property
    def is_schur_idempotent(self) -> bool:
        return close(schur_matrix(self.qset, self.A, self.A), self.A, self.tol)

    @cached_property
    def is_self_adjoint(self) -> bool:
        return close(self.A, self.A.conj().T, self.tol)

    @cached_property
    def is_undirected(self) -> bool:
        return self.is_real and self.is_self_adjoint

    @cached_property
    def is_kms_symmetric(self) -> bool:
        from .qalg import kms_adjoint

        return self.is_real and self.adj.isclose(kms_adjoint(self.adj), self.tol)

    @cached_property
    def _schur_with_id(self) -> np.ndarray:
        return schur_matrix(self.qset, self.A, np.eye(self.dim))

    @cached_property
    def is_reflexive(self) -> bool:
        return close(self._schur_with_id, np.eye(self.dim), self.tol)

    @cached_property
    def is_irreflexive(self) -> bool:
        return close(self._schur_with_id, 0 * self.A, self.tol)

    @cached_property
    def has_no_partial_loops(self) -> bool:
        return close(self._schur_with_id, schur_matrix(self.qset, np.eye(self.dim), self.A), self.tol)

    @cached_property
    def is_tracial(self) -> bool:
        return self.qset.is_tracial

    @cached_property
    def degree(self) -> float | complex | None:
        one = self.qset.unit
        d = complex(np.vdot(one, self.A @ one))
        scale = self.tol.eq_tol * max(1.0, abs(d))
        if np.linalg.norm(self.A @ one - d * one) > scale or np.linalg.norm(self.A.conj().T @ one - d * one) > scale:
            return None
        if self.is_real or abs(d.imag) <= scale:
            return float(d.real)
        return d

    @property
    def is_regular(self) -> bool:
        return self.degree is not None

    @cached_property
    def edge_projection(self) -> EdgeProjection:
        return edge_projection_of(self.adj)

    @cached_property
    def is_schur_central(self) -> bool:
        """Centrality of ``p_A`` in ``B^op (x) B``."""
        return self.edge_projection.is_central(self.tol)

    @cached_property
    def left_schur(self) -> np.ndarray:
        return left_schur_matrix(self.adj)

    def __repr__(self):
        label = f"{self.name!r}, " if self.name else ""
        return f"QuantumGraph({label}blocks={list(self.qset.blocks)}, dim={self.dim})"


def is_real(G: QuantumGraph) -> bool:
    return G.is_real


def is_schur_idempotent(G: QuantumGraph) -> bool:
    return G.is_schur_idempotent


def is_undirected(G: QuantumGraph) -> bool:
    return G.is_undirected


def is_kms_symmetric(G: QuantumGraph) -> bool:
    return G.is_kms_symmetric


def is_reflexive(G: QuantumGraph) -> bool:
    return G.is_reflexive


def is_irreflexive(G: QuantumGraph) -> bool:
    return G.is_irreflexive


def has_no_partial_loops(G: QuantumGraph) -> bool:
    return G.has_no_partial_loops


def is_schur_central(G: QuantumGraph, cross_check: bool = True) -> bool:
    """Schur centrality via ``p_A``; optionally cross-checked against
    ``A . T = T . A`` for the full operator basis."""
    central = G.is_schur_central
    if cross_check:
        direct = close(G.left_schur, right_schur_matrix(G.adj), G.tol)
        if direct != central:
            raise AssertionError("Schur centrality disagrees between p_A and the operator basis")
    return central


def degree(G: QuantumGraph):
    """The degree ``d`` with ``A 1 = d 1 = A^dagger 1``, or ``None`` if irregular."""
    d = G.degree
    if d is not None and G.is_real:
        if not (-G.tol.eig_tol <= d <= G.qset.delta_sq + G.tol.eig_tol):
            raise AssertionError(f"degree {d} outside [0, delta^2]")
    return d


def edge_count(G: QuantumGraph) -> float:
    """``delta^2 <1|A|1>``."""
    if not G.is_real:
        raise NotReal("edge count is defined for real quantum graphs")
    one = G.qset.unit
    return float(G.qset.delta_sq * np.vdot(one, G.A @ one).real)


def to_edge_projection(G: QuantumGraph) -> EdgeProjection:
    if not G.is_real:
        raise NotReal("p_A is a projection only for real graphs")
    return G.edge_projection


def from_edge_projection(ep: EdgeProjection, tol: Tolerance | None = None, name: str = "") -> QuantumGraph:
    tol = _tol(tol)
    if not ep.is_projection(tol):
        raise NotProjection("edge projection is not a self-adjoint idempotent")
    return QuantumGraph(ep.qset, superop_of_edge_projection(ep), name=name, tol=tol)


def to_bimodule_projection(G: QuantumGraph) -> BimoduleProjection:
    if not G.is_real:
        raise NotReal("P_A is a bimodule projection only for real graphs")
    return bimodule_projection_of(G.adj)


def from_bimodule_projection(P: BimoduleProjection, tol: Tolerance | None = None, name: str = "") -> QuantumGraph:
    tol = _tol(tol)
    if not P.is_projection(tol):
        raise NotProjection("P is not an orthogonal projection on B (x) B")
    if P.bimodule_residual() > tol.eq_tol * 10:
        raise NotBimodule("P fails P(x xi y) = x P(xi) y")
    return QuantumGraph(P.qset, adjacency_of_bimodule(P), name=name, tol=tol)


# ---------------------------------------------------------------------------
# Constructions


def _graph(q, A, name, tol=None):
    return QuantumGraph(q, SuperOp(q, 1, 1, A), name=name, tol=_tol(tol))


def trivial_graph(q: QuantumSet, name: str = "") -> QuantumGraph:
    return _graph(q, np.eye(q.dim), name or "trivial")


def reflexive_complete(q: QuantumSet, name: str = "") -> QuantumGraph:
    return _graph(q, reflexive_complete_matrix(q), name or "reflexive-complete")


def complete_graph(q: QuantumSet, name: str = "") -> QuantumGraph:
    return _graph(q, reflexive_complete_matrix(q) - np.eye(q.dim), name or "complete")


def complement(G: QuantumGraph, name: str = "") -> QuantumGraph:
    """``J - A``."""
    if not G.is_real:
        raise NotReal("complement is taken for real graphs")
    return _graph(G.qset, reflexive_complete_matrix(G.qset) - G.A, name or f"complement({G.name})", G.tol)


def empty_graph(q: QuantumSet, name: str = "") -> QuantumGraph:
    return _graph(q, np.zeros((q.dim, q.dim)), name or "empty")


def classical_graph(adjacency, name: str = "") -> QuantumGraph:
    """Classical graph on tracial ``C^n``.

    ``adjacency`` is used as the operator matrix on functions, i.e.
    ``adjacency[i][j] = 1`` for an edge ``j -> i``.  The GNS basis of tracial
    ``C^n`` is a uniform rescaling of the point masses, so the matrix is
    unchanged.
    """
    A = np.asarray(adjacency, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or not np.all((A == 0) | (A == 1)):
        raise ValueError("adjacency must be a square 0/1 matrix")
    return _graph(tracial_form([1] * len(A)), A, name)


def classical_digraph(n: int, edges, name: str = "") -> QuantumGraph:
    """Directed graph from an edge list ``(i, j)`` meaning ``i -> j``."""
    A = np.zeros((n, n))
    for i, j in edges:
        A[j, i] = 1
    return classical_graph(A, name)


def disjoint_union(G0: QuantumGraph, G1: QuantumGraph, name: str = "") -> QuantumGraph:
    q, _ = direct_sum_qset(G0.qset, G1.qset)
    N0, N1 = G0.dim, G1.dim
    A = np.zeros((N0 + N1, N0 + N1), dtype=complex)
    A[:N0, :N0] = G0.A
    A[N0:, N0:] = G1.A
    return _graph(q, A, name or f"{G0.name}+{G1.name}")


def tensor_product(G0: QuantumGraph, G1: QuantumGraph, name: str = "") -> QuantumGraph:
    q, perm = tensor_qset(G0.qset, G1.qset)
    A = np.kron(G0.A, G1.A)[np.ix_(perm, perm)]
    return _graph(q, A, name or f"{G0.name}x{G1.name}")


def bipartite_double(G: QuantumGraph, name: str = "") -> QuantumGraph:
    """``(B + B, (psi + psi)/2, [[0, A], [A^dagger, 0]])``."""
    if not G.is_real:
        raise NotReal("bipartite double is taken for real graphs")
    q, _ = direct_sum_qset(G.qset, G.qset)
    N = G.dim
    A = np.zeros((2 * N, 2 * N), dtype=complex)
    A[:N, N:] = G.A
    A[N:, :N] = G.A.conj().T
    return _graph(q, A, name or f"double({G.name})")


def conjugate_graph(G: QuantumGraph, unitary_blocks, name: str = "") -> QuantumGraph:
    """Transport ``G`` along the automorphism ``x -> u x u*``.

    ``u`` must commute with the density so that the automorphism preserves
    ``psi``; any unitary works when ``G`` is tracial.
    """
    from .qalg import left_mult, right_mult

    q = G.qset
    u = q.element(unitary_blocks)
    Ad = left_mult(u).matrix @ right_mult(u.star()).matrix
    return _graph(q, Ad @ G.A @ Ad.conj().T, name or f"conj({G.name})", G.tol)


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    Z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    Qm, R = np.linalg.qr(Z)
    return Qm * (np.diag(R) / np.abs(np.diag(R)))[None, :]


def random_graph(q: QuantumSet, rng: np.random.Generator, undirected: bool = False,
                 fill: float = 0.5, name: str = "") -> QuantumGraph:
    """Random real quantum graph.

    A random Hermitian element of ``B^op (x) B`` is cut down to a random
    subset of its eigenvectors; the resulting projection is mapped back to an
    adjacency operator.  For ``undirected`` (tracial only) the projection is
    replaced by its meet with the projection of ``A^dagger``.
    """
    from .errors import HypothesesNotMet

    if undirected and not q.is_tracial:
        raise HypothesesNotMet(["tracial"], "undirected random graphs require a tracial quantum set")
    sizes = _pair_layout(q)[0]
    blocks = []
    for n in sizes:
        H = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        _, V = np.linalg.eigh(H + H.conj().T)
        keep = rng.random(n) < fill
        blocks.append(V[:, keep] @ V[:, keep].conj().T)
    G = from_edge_projection(EdgeProjection(q, tuple(blocks)), name=name or "random")
    if not undirected:
        return G
    pd = edge_projection_of(G.adj.dagger)
    meet = []
    for a, b in zip(G.edge_projection.blocks, pd.blocks):
        w, V = np.linalg.eigh(a + b)
        top = np.abs(w - 2) < 1e-6
        meet.append(V[:, top] @ V[:, top].conj().T)
    return from_edge_projection(EdgeProjection(q, tuple(meet)), name=name or "random-undirected")


# ---------------------------------------------------------------------------
# Orientations


def _range_rank(*mats, rel=1e-9) -> int:
    return numerical_rank(np.hstack(mats), rel)


def is_orientation(G: QuantumGraph, T: SuperOp, kms: bool = False, tol: Tolerance | None = None) -> bool:
    """Check that ``T`` orients ``G``.

    ``T`` must be a Schur projection with ``A . T = T``, ``T . T' = 0`` and
    ``ran(T . -) + ran(T' . -) = ran(A . -)``, where ``T'`` is the GNS adjoint
    or, with ``kms=True``, the KMS adjoint.
    """
    from .qalg import kms_adjoint

    tol = _tol(tol)
    q = _check_endo(T, G.adj)
    Tm = T.matrix
    Td = (kms_adjoint(T) if kms else T.dagger).matrix
    if not (close(schur_matrix(q, Tm, Tm), Tm, tol) and close(schur_involution(T).matrix, Tm, tol)):
        return False
    if not close(schur_matrix(q, G.A, Tm), Tm, tol):
        return False
    if not close(schur_matrix(q, Tm, Td), 0 * Tm, tol):
        return False
    LT, LTd, LA = left_schur_matrix(T), left_schur_matrix(SuperOp(q, 1, 1, Td)), G.left_schur
    rA = _range_rank(LA)
    return _range_rank(LT, LTd) == rA and _range_rank(LA, LT, LTd) == rA


@dataclass
class OrientationReport:
    rank_p: int
    edge_space_dim: int
    irreflexive: bool
    orientable_possible: bool
    reason: str


def orientation_rank_obstruction(G: QuantumGraph) -> OrientationReport:
    """Necessary conditions for an orientation of an irreflexive undirected graph.

    An orientation gives ``p_A >= p_T + p_T'`` with orthogonal nonzero
    summands, so ``rank p_A >= 2``, and splits ``ran(A . -)`` into two pieces
    of equal dimension, so that dimension is even.
    """
    ep = G.edge_projection
    ranks = ep.block_ranks(G.tol)
    sizes = [len(b) for b in ep.blocks]
    rank_p = sum(ranks)
    edim = sum(r * n for r, n in zip(ranks, sizes))
    if rank_p == 0:
        return OrientationReport(0, 0, G.is_irreflexive, True, "empty graph is trivially oriented")
    if not G.is_irreflexive:
        return OrientationReport(rank_p, edim, False, False, "graph has loops; T . T' = 0 cannot cover them")
    if rank_p < 2:
        return OrientationReport(rank_p, edim, True, False, "rank(p_A) < 2: no room for p_T + p_T'")
    if edim % 2:
        return OrientationReport(rank_p, edim, True, False, "edge space has odd dimension")
    return OrientationReport(rank_p, edim, True, True, "rank obstruction does not fire")
