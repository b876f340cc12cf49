"""Quantum sets: multimatrix algebras with a delta-form, and superoperators on them.

A quantum set is ``B = M_{n_1} + ... + M_{n_k}`` together with a faithful state
``psi = Tr(Q .)`` whose density ``Q`` is diagonal in every block.  Elements of
``B`` are identified with vectors of the GNS space ``L^2(B, psi)`` via the
orthonormal basis

    e_(s, i, j) = E^(s)_ij / sqrt(q^(s)_j)

ordered block-, row-, column-lexicographically.  Every linear map
``B^{(x)m} -> B^{(x)n}`` is stored as a dense complex matrix in the Kronecker
product of this basis.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

from .errors import (
    ArityMismatch,
    NotAState,
    NotDeltaForm,
    NotFaithful,
    OwnerMismatch,
    QGraphError,
    TooLarge,
)

MAX_DIM = 128


@dataclass(frozen=True)
class Tolerance:
    """Numerical tolerances.

    ``eq_tol`` is the relative Frobenius distance under which two operators are
    considered equal; ``eig_tol`` is the absolute radius used to cluster
    eigenvalues.
    """

    eq_tol: float = 1e-9
    eig_tol: float = 1e-7

    def __post_init__(self):
        if not (0 < self.eq_tol < 1 and 0 < self.eig_tol < 1):
            raise ValueError("tolerances must lie in (0, 1)")


def default_tolerance() -> Tolerance:
    env = os.environ.get("QGRAPH_TOL_EQ")
    if env:
        return Tolerance(eq_tol=float(env))
    return Tolerance()


def _tol(tol):
    return default_tolerance() if tol is None else tol


def close(x, y, tol: Tolerance | None = None, rtol: float | None = None) -> bool:
    """Relative Frobenius-norm equality, scaled by ``max(|x|, |y|, 1)``."""
    rtol = _tol(tol).eq_tol if rtol is None else rtol
    return rel_residual(x, y) <= rtol


def rel_residual(x, y) -> float:
    x = np.asarray(x)
    y = np.asarray(y)
    scale = max(np.linalg.norm(x), np.linalg.norm(y), 1.0)
    return float(np.linalg.norm(x - y) / scale)


# ---------------------------------------------------------------------------
# Quantum sets


@dataclass(frozen=True, eq=False)
class QuantumSet:
    blocks: tuple[int, ...]
    density: tuple[np.ndarray, ...]
    delta_sq: float

    def __repr__(self):
        dens = ", ".join(np.array2string(q, precision=4) for q in self.density)
        return f"QuantumSet(blocks={list(self.blocks)}, density=[{dens}], delta_sq={self.delta_sq:.6g})"

    def __eq__(self, other):
        if not isinstance(other, QuantumSet):
            return NotImplemented
        if self is other:
            return True
        return self.blocks == other.blocks and all(
            float(np.abs(a - b).max()) <= 1e-12 for a, b in zip(self.density, other.density)
        )

    def __hash__(self):
        return hash((self.blocks, tuple(np.round(np.concatenate(self.density), 12))))

    @property
    def dim(self) -> int:
        return sum(n * n for n in self.blocks)

    @property
    def delta(self) -> float:
        return float(np.sqrt(self.delta_sq))

    @cached_property
    def is_tracial(self) -> bool:
        # tracial iff Q is central, i.e. constant within every block
        return all(np.allclose(q, q[0], rtol=1e-12, atol=0) for q in self.density)

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        out = [0]
        for n in self.blocks:
            out.append(out[-1] + n * n)
        return tuple(out)

    @cached_property
    def index(self) -> list[tuple[int, int, int]]:
        """``(block, row, column)`` label of every GNS coordinate."""
        return [(s, i, j) for s, n in enumerate(self.blocks) for i in range(n) for j in range(n)]

    @cached_property
    def _row_q(self) -> np.ndarray:
        return np.concatenate([np.repeat(q, n) for q, n in zip(self.density, self.blocks)])

    @cached_property
    def _col_q(self) -> np.ndarray:
        return np.concatenate([np.tile(q, n) for q, n in zip(self.density, self.blocks)])

    @cached_property
    def unit(self) -> np.ndarray:
        """Coordinates of ``1_B``."""
        v = np.zeros(self.dim, dtype=complex)
        for s, n in enumerate(self.blocks):
            for i in range(n):
                v[self.offsets[s] + i * n + i] = np.sqrt(self.density[s][i])
        return v

    @cached_property
    def mult_tensor(self) -> np.ndarray:
        """``M[a, b, c]`` with ``e_b e_c = sum_a M[a, b, c] e_a``."""
        N = self.dim
        M = np.zeros((N, N, N))
        for s, n in enumerate(self.blocks):
            o, q = self.offsets[s], self.density[s]
            for i in range(n):
                for j in range(n):
                    for l in range(n):
                        M[o + i * n + l, o + i * n + j, o + j * n + l] = 1.0 / np.sqrt(q[j])
        return M

    @cached_property
    def star_matrix(self) -> np.ndarray:
        """Real involutive matrix ``K`` with ``coords(x*) = K conj(coords(x))``."""
        N = self.dim
        K = np.zeros((N, N))
        for s, n in enumerate(self.blocks):
            o, q = self.offsets[s], self.density[s]
            for i in range(n):
                for j in range(n):
                    K[o + i * n + j, o + j * n + i] = np.sqrt(q[j] / q[i])
        return K

    def modular_factors(self, z: complex) -> np.ndarray:
        """Diagonal of ``sigma_z`` in the GNS basis: ``(q_i / q_j)^(i z)``."""
        return np.exp(1j * z * (np.log(self._row_q) - np.log(self._col_q)))

    # element helpers
    def element(self, blocks) -> "AlgebraElement":
        blocks = tuple(np.asarray(b, dtype=complex) for b in blocks)
        if len(blocks) != len(self.blocks) or any(b.shape != (n, n) for b, n in zip(blocks, self.blocks)):
            raise QGraphError("block shapes do not match the quantum set")
        return AlgebraElement(self, blocks)

    def from_vector(self, v) -> "AlgebraElement":
        v = np.asarray(v, dtype=complex)
        blocks = []
        for s, n in enumerate(self.blocks):
            o = self.offsets[s]
            blocks.append(v[o : o + n * n].reshape(n, n) / np.sqrt(self.density[s])[None, :])
        return AlgebraElement(self, tuple(blocks))

    def one(self) -> "AlgebraElement":
        return self.element([np.eye(n) for n in self.blocks])

    def zero(self) -> "AlgebraElement":
        return self.element([np.zeros((n, n)) for n in self.blocks])

    def matrix_unit(self, s: int, i: int, j: int) -> "AlgebraElement":
        blocks = [np.zeros((n, n)) for n in self.blocks]
        blocks[s][i, j] = 1.0
        return self.element(blocks)

    def state(self, x: "AlgebraElement") -> complex:
        return complex(sum(np.sum(q * np.diag(b)) for q, b in zip(self.density, x.blocks)))

    def identity(self, arity: int = 1) -> "SuperOp":
        return SuperOp(self, arity, arity, np.eye(self.dim**arity, dtype=complex))


def make_quantum_set(blocks: Sequence[int], density: Sequence[Sequence[float]], *,
                     tol: Tolerance | None = None, max_dim: int = MAX_DIM) -> QuantumSet:
    """Validate block sizes and a diagonal density and return the quantum set.

    Raises ``NotFaithful`` for a nonpositive entry, ``NotAState`` if the
    density does not have unit trace and ``NotDeltaForm`` if ``Tr(Q_s^{-1})``
    differs between blocks.
    """
    tol = _tol(tol)
    blocks = tuple(int(n) for n in blocks)
    if not blocks or any(n < 1 for n in blocks):
        raise QGraphError("block sizes must be positive integers")
    if len(density) != len(blocks):
        raise QGraphError("one density vector per block is required")
    dens = []
    for n, q in zip(blocks, density):
        q = np.asarray(q, dtype=float).reshape(-1)
        if q.shape != (n,):
            raise QGraphError(f"density vector of length {q.size} for block of size {n}")
        dens.append(q)
    if sum(n * n for n in blocks) > max_dim:
        raise TooLarge(f"dim B = {sum(n * n for n in blocks)} exceeds max_dim = {max_dim}")
    if any(np.any(q <= 0) for q in dens):
        raise NotFaithful("density entries must be strictly positive")
    total = sum(q.sum() for q in dens)
    if abs(total - 1.0) > tol.eq_tol * 10:
        raise NotAState(f"trace of density is {total!r}, expected 1")
    inv = np.array([np.sum(1.0 / q) for q in dens])
    if np.max(np.abs(inv - inv[0])) > tol.eq_tol * inv.max() * 10:
        raise NotDeltaForm(f"Tr(Q_s^-1) differs between blocks: {inv.tolist()}")
    return QuantumSet(blocks, tuple(dens), float(inv.mean()))


def tracial_form(blocks: Sequence[int]) -> QuantumSet:
    """The unique tracial delta-form, ``delta^2 = dim B``."""
    return _tracial_form(tuple(int(n) for n in blocks))


@lru_cache(maxsize=256)
def _tracial_form(blocks: tuple[int, ...]) -> QuantumSet:
    dim = sum(n * n for n in blocks)
    return make_quantum_set(blocks, [np.full(n, n / dim) for n in blocks])


def random_quantum_set(rng: np.random.Generator, blocks: Sequence[int], tracial: bool = False) -> QuantumSet:
    """Random delta-form on the given block profile."""
    if tracial:
        return tracial_form(blocks)
    ws = [rng.uniform(0.2, 1.0, size=n) for n in blocks]
    H = np.array([np.sum(1.0 / w) for w in ws])
    W = np.array([np.sum(w) for w in ws])
    dsq = float(np.sum(H * W))
    return make_quantum_set(blocks, [w * h / dsq for w, h in zip(ws, H)])


def direct_sum_qset(q0: QuantumSet, q1: QuantumSet) -> tuple[QuantumSet, float]:
    """``B0 + B1`` with state ``alpha psi0 + (1 - alpha) psi1``; returns ``(qset, alpha)``.

    ``alpha = delta0^2 / (delta0^2 + delta1^2)`` is the only weight giving a delta-form.
    """
    alpha = q0.delta_sq / (q0.delta_sq + q1.delta_sq)
    dens = [alpha * q for q in q0.density] + [(1 - alpha) * q for q in q1.density]
    return make_quantum_set(q0.blocks + q1.blocks, dens), alpha


def tensor_qset(q0: QuantumSet, q1: QuantumSet) -> tuple[QuantumSet, np.ndarray]:
    """``B0 (x) B1`` with ``psi0 (x) psi1``.

    Returns ``(qset, perm)`` where ``perm[canonical] = kron_index`` reorders the
    Kronecker product of the two GNS bases into the canonical basis of the
    tensor product. The basis vectors agree up to this relabelling.
    """
    blocks, dens, labels = [], [], []
    for s, n in enumerate(q0.blocks):
        for t, m in enumerate(q1.blocks):
            blocks.append(n * m)
            dens.append(np.kron(q0.density[s], q1.density[t]))
            labels.append((s, t))
    out = make_quantum_set(blocks, dens, max_dim=max(MAX_DIM, q0.dim * q1.dim))
    perm = np.empty(out.dim, dtype=int)
    N1 = q1.dim
    pos = 0
    for s, t in labels:
        n, m = q0.blocks[s], q1.blocks[t]
        for i in range(n):
            for k in range(m):
                for j in range(n):
                    for l in range(m):
                        a = q0.offsets[s] + i * n + j
                        b = q1.offsets[t] + k * m + l
                        perm[pos] = a * N1 + b
                        pos += 1
    return out, perm


# ---------------------------------------------------------------------------
# Elements


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    owner: QuantumSet
    blocks: tuple[np.ndarray, ...]

    @cached_property
    def vector(self) -> np.ndarray:
        return np.concatenate(
            [(b * np.sqrt(q)[None, :]).reshape(-1) for b, q in zip(self.blocks, self.owner.density)]
        )

    def _check(self, other):
        if other.owner != self.owner:
            raise OwnerMismatch("elements belong to different quantum sets")

    def __add__(self, other):
        self._check(other)
        return AlgebraElement(self.owner, tuple(a + b for a, b in zip(self.blocks, other.blocks)))

    def __sub__(self, other):
        self._check(other)
        return AlgebraElement(self.owner, tuple(a - b for a, b in zip(self.blocks, other.blocks)))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check(other)
            return AlgebraElement(self.owner, tuple(a @ b for a, b in zip(self.blocks, other.blocks)))
        return AlgebraElement(self.owner, tuple(other * a for a in self.blocks))

    __rmul__ = __mul__

    def __neg__(self):
        return AlgebraElement(self.owner, tuple(-a for a in self.blocks))

    def star(self) -> "AlgebraElement":
        return AlgebraElement(self.owner, tuple(a.conj().T for a in self.blocks))

    def is_self_adjoint(self, atol: float = 1e-9) -> bool:
        return all(np.allclose(a, a.conj().T, rtol=0, atol=atol) for a in self.blocks)

    def norm2(self) -> float:
        return float(np.linalg.norm(self.vector))

    def __repr__(self):
        return f"AlgebraElement({[np.round(b, 6).tolist() for b in self.blocks]})"


def gns_inner(x: AlgebraElement, y: AlgebraElement) -> complex:
    """``psi(x* y)``."""
    x._check(y)
    return complex(np.vdot(x.vector, y.vector))


def kms_inner(x: AlgebraElement, y: AlgebraElement) -> complex:
    """``psi(x* sigma_{-i/2}(y))``."""
    x._check(y)
    w = x.owner.modular_factors(-0.5j)
    return complex(np.vdot(x.vector, w * y.vector))


def gns_basis(qset: QuantumSet) -> list[AlgebraElement]:
    return [qset.from_vector(v) for v in np.eye(qset.dim)]


# ---------------------------------------------------------------------------
# Superoperators


@dataclass(frozen=True, eq=False)
class SuperOp:
    """Linear map ``B^{(x)m} -> B^{(x)n}`` as a ``N^n x N^m`` matrix."""

    owner: QuantumSet
    in_arity: int
    out_arity: int
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        N = self.owner.dim
        mat = np.asarray(self.matrix, dtype=complex)
        if mat.shape != (N**self.out_arity, N**self.in_arity):
            raise ArityMismatch(
                f"matrix shape {mat.shape} inconsistent with arity {self.in_arity}->{self.out_arity}"
            )
        object.__setattr__(self, "matrix", mat)

    def _same(self, other):
        if other.owner != self.owner:
            raise OwnerMismatch("superoperators act on different quantum sets")
        if (other.in_arity, other.out_arity) != (self.in_arity, self.out_arity):
            raise ArityMismatch("arities differ")

    def __add__(self, other):
        self._same(other)
        return SuperOp(self.owner, self.in_arity, self.out_arity, self.matrix + other.matrix)

    def __sub__(self, other):
        self._same(other)
        return SuperOp(self.owner, self.in_arity, self.out_arity, self.matrix - other.matrix)

    def __neg__(self):
        return SuperOp(self.owner, self.in_arity, self.out_arity, -self.matrix)

    def __mul__(self, c):
        return SuperOp(self.owner, self.in_arity, self.out_arity, c * self.matrix)

    __rmul__ = __mul__

    def __matmul__(self, other):
        return compose(self, other)

    def __call__(self, x):
        return apply(self, x)

    @property
    def dagger(self) -> "SuperOp":
        return gns_adjoint(self)

    def isclose(self, other, tol: Tolerance | None = None) -> bool:
        self._same(other)
        return close(self.matrix, other.matrix, tol)


def compose(S: SuperOp, T: SuperOp) -> SuperOp:
    """``S o T``."""
    if S.owner != T.owner:
        raise OwnerMismatch("superoperators act on different quantum sets")
    if S.in_arity != T.out_arity:
        raise ArityMismatch(f"cannot compose arity {S.in_arity} input with arity {T.out_arity} output")
    return SuperOp(S.owner, T.in_arity, S.out_arity, S.matrix @ T.matrix)


def tensor(S: SuperOp, T: SuperOp) -> SuperOp:
    if S.owner != T.owner:
        raise OwnerMismatch("superoperators act on different quantum sets")
    return SuperOp(S.owner, S.in_arity + T.in_arity, S.out_arity + T.out_arity, np.kron(S.matrix, T.matrix))


def apply(T: SuperOp, x):
    """Apply ``T`` to an element (arity 1), a tuple/list of elements (their
    tensor product) or a raw coordinate vector of length ``N^m``.

    Arity-1 outputs come back as ``AlgebraElement``; higher arities as the
    coordinate vector over the Kronecker basis.
    """
    if isinstance(x, AlgebraElement):
        xs = (x,)
    elif isinstance(x, (tuple, list)) and x and isinstance(x[0], AlgebraElement):
        xs = tuple(x)
    else:
        v = np.asarray(x, dtype=complex)
        if v.shape != (T.matrix.shape[1],):
            raise ArityMismatch("coordinate vector has the wrong length")
        out = T.matrix @ v
        return T.owner.from_vector(out) if T.out_arity == 1 else out
    if len(xs) != T.in_arity:
        raise ArityMismatch(f"expected {T.in_arity} tensor factors, got {len(xs)}")
    v = np.ones(1, dtype=complex)
    for y in xs:
        if y.owner != T.owner:
            raise OwnerMismatch("element belongs to a different quantum set")
        v = np.kron(v, y.vector)
    out = T.matrix @ v
    return T.owner.from_vector(out) if T.out_arity == 1 else out


def gns_adjoint(T: SuperOp) -> SuperOp:
    return SuperOp(T.owner, T.out_arity, T.in_arity, T.matrix.conj().T)


def _kron_power(d: np.ndarray, k: int) -> np.ndarray:
    out = np.ones(1, dtype=complex)
    for _ in range(k):
        out = np.kron(out, d)
    return out


def kms_adjoint(T: SuperOp) -> SuperOp:
    """``sigma_{i/2}^{(x)m} T^dagger sigma_{-i/2}^{(x)n}`` for ``T: B^m -> B^n``."""
    q = T.owner
    left = _kron_power(q.modular_factors(0.5j), T.in_arity)
    right = _kron_power(q.modular_factors(-0.5j), T.out_arity)
    return SuperOp(q, T.out_arity, T.in_arity, left[:, None] * T.matrix.conj().T * right[None, :])


def mult_map(qset: QuantumSet) -> SuperOp:
    N = qset.dim
    return SuperOp(qset, 2, 1, qset.mult_tensor.reshape(N, N * N))


def comult_map(qset: QuantumSet) -> SuperOp:
    return gns_adjoint(mult_map(qset))


def unit_map(qset: QuantumSet) -> SuperOp:
    """``C -> B, 1 -> 1_B`` (arity 0 -> 1)."""
    return SuperOp(qset, 0, 1, qset.unit[:, None])


def counit_map(qset: QuantumSet) -> SuperOp:
    """``psi = <1_B|`` (arity 1 -> 0)."""
    return SuperOp(qset, 1, 0, qset.unit.conj()[None, :])


def modular_automorphism(qset: QuantumSet, z: complex) -> SuperOp:
    """``sigma_z(x) = Q^{iz} x Q^{-iz}``."""
    return SuperOp(qset, 1, 1, np.diag(qset.modular_factors(z)))


def left_mult(x: AlgebraElement) -> SuperOp:
    """``lambda(x): y -> x y``."""
    M = x.owner.mult_tensor
    return SuperOp(x.owner, 1, 1, np.einsum("abc,b->ac", M, x.vector))


def right_mult(x: AlgebraElement) -> SuperOp:
    """``rho(x): y -> y x``."""
    M = x.owner.mult_tensor
    return SuperOp(x.owner, 1, 1, np.einsum("abc,c->ab", M, x.vector))


def random_superop(rng: np.random.Generator, qset: QuantumSet, m: int = 1, n: int = 1) -> SuperOp:
    N = qset.dim
    shape = (N**n, N**m)
    return SuperOp(qset, m, n, rng.standard_normal(shape) + 1j * rng.standard_normal(shape))


def random_element(rng: np.random.Generator, qset: QuantumSet, self_adjoint: bool = False) -> AlgebraElement:
    blocks = [rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)) for n in qset.blocks]
    if self_adjoint:
        blocks = [(b + b.conj().T) / 2 for b in blocks]
    return qset.element(blocks)
