"""Positive maps from rotations, their witnesses, and the isotropic twirl.

A rotation block acting on the diagonal sector of the Gell-Mann basis,
extended by minus the identity on the off-diagonal sector, defines a unital
positive map on M_n(C). Its Choi-type witness on C^n x C^n has minus the
matrix units as off-diagonal blocks and a doubly stochastic matrix (scaled by
n-1) along the diagonal blocks. Twirling over the discrete Weyl group reduces
the stochastic matrix to its circulant average.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .gellmann import GellMannBasis, build_basis, diag_expectations, expand
from .linalg import kron

__all__ = [
    "KossakowskiMap",
    "OrthogonalEmbedding",
    "WeylSet",
    "Witness",
    "build_weyl_set",
    "build_witness",
    "choi_witness",
    "embedding_from_block",
    "embedding_from_euler",
    "euler_rotation",
    "map_from_embedding",
    "max_entangled_projector",
    "phi_matrix",
    "twirl",
]

ORTHOGONALITY_TOL = 1e-12


def euler_rotation(alpha: float, beta: float, gamma: float) -> np.ndarray:
    """Proper rotation of R^3 from the three Euler angles."""
    sa, ca = np.sin(alpha), np.cos(alpha)
    sb, cb = np.sin(beta), np.cos(beta)
    sg, cg = np.sin(gamma), np.cos(gamma)
    return np.array(
        [
            [ca * cg - cb * sa * sg, cg * sa + ca * cb * sg, sb * sg],
            [-cb * cg * sa - ca * sg, ca * cb * cg - sa * sg, cg * sb],
            [sa * sb, -ca * sb, cb],
        ]
    )


@dataclass(frozen=True, eq=False)
class OrthogonalEmbedding:
    """Small orthogonal block on the diagonal sector, minus identity elsewhere.

    block is an (n-1) x (n-1) orthogonal matrix; parity is "proper" or
    "improper" according to its determinant.
    """

    n: int
    block: np.ndarray
    parity: str

    def rotation(self) -> np.ndarray:
        """Full orthogonal matrix on the traceless sector, size n*n - 1."""
        n = self.n
        dim = n * n - 1
        r = -np.eye(dim)
        r[: n - 1, : n - 1] = self.block
        return r


def embedding_from_block(block: np.ndarray, n: int = 4) -> OrthogonalEmbedding:
    """Wrap an orthogonal (n-1) x (n-1) block, inferring its parity."""
    block = np.asarray(block, dtype=float)
    if block.shape != (n - 1, n - 1):
        raise ValueError(f"expected shape {(n - 1, n - 1)}, got {block.shape}")
    dev = float(np.max(np.abs(block.T @ block - np.eye(n - 1))))
    if dev > ORTHOGONALITY_TOL:
        raise ValueError(f"block is not orthogonal: max |B^T B - I| = {dev:.3e}")
    parity = "proper" if np.linalg.det(block) > 0 else "improper"
    return OrthogonalEmbedding(n=n, block=block.copy(), parity=parity)


def embedding_from_euler(
    alpha: float,
    beta: float,
    gamma: float,
    parity: str = "proper",
    n: int = 4,
) -> OrthogonalEmbedding:
    """Embedding whose block is the Euler rotation, negated when improper."""
    if n != 4:
        raise ValueError("Euler angles parameterize the 3 x 3 block, so n must be 4")
    if parity not in ("proper", "improper"):
        raise ValueError(f"parity must be 'proper' or 'improper', got {parity!r}")
    block = euler_rotation(alpha, beta, gamma)
    if parity == "improper":
        block = -block
    return OrthogonalEmbedding(n=n, block=block, parity=parity)


@dataclass(frozen=True, eq=False)
class KossakowskiMap:
    """Unital map defined by an orthogonal rotation of the traceless sector."""

    n: int
    rotation: np.ndarray
    basis: GellMannBasis = field(repr=False)

    def apply(self, x: np.ndarray) -> np.ndarray:
        """Image of x: identity part plus the rotated traceless expansion."""
        coeffs = expand(x, self.basis)[1:]
        rotated = self.rotation @ coeffs
        out = np.eye(self.n, dtype=complex) * (np.trace(x) / self.n)
        out += np.einsum("a,aij->ij", rotated, self.basis.elements[1:]) / (self.n - 1)
        return out

    def apply_dual(self, y: np.ndarray) -> np.ndarray:
        """Image under the trace-pairing dual, which rotates by the transpose."""
        coeffs = expand(y, self.basis)[1:]
        rotated = self.rotation.T @ coeffs
        out = np.eye(self.n, dtype=complex) * (np.trace(y) / self.n)
        out += np.einsum("a,aij->ij", rotated, self.basis.elements[1:]) / (self.n - 1)
        return out

    __call__ = apply


def map_from_embedding(emb: OrthogonalEmbedding) -> KossakowskiMap:
    """Map whose action on ket projectors realizes phi_matrix(emb).

    The stochastic-matrix convention pairs the input ket with ROWS of the
    small block, while the generic map formula pairs it with columns; the
    block therefore enters transposed here so both routes agree for every
    embedding, not only symmetric blocks.
    """
    n = emb.n
    dim = n * n - 1
    r = -np.eye(dim)
    r[: n - 1, : n - 1] = emb.block.T
    return KossakowskiMap(n=n, rotation=r, basis=build_basis(n))


def phi_matrix(emb: OrthogonalEmbedding) -> np.ndarray:
    """Doubly stochastic matrix of the map's action on ket projectors.

    Entry (i, j) is 1/n plus the block contraction of the diagonal-sector
    coordinates of kets i and j, scaled by 1/(n-1). Row i lists the output
    weights of the i-th ket projector.
    """
    n = emb.n
    mu = diag_expectations(build_basis(n))
    return 1.0 / n + (mu @ emb.block @ mu.T) / (n - 1)


@dataclass(frozen=True, eq=False)
class Witness:
    """Block-structured witness operator on C^n x C^n."""

    n: int
    operator: np.ndarray

    def trace(self) -> float:
        return float(np.trace(self.operator).real)


def _unit(i: int, j: int, n: int) -> np.ndarray:
    m = np.zeros((n, n), dtype=complex)
    m[i, j] = 1.0
    return m


def build_witness(emb: OrthogonalEmbedding) -> Witness:
    """Witness with -|i><j| off-diagonal blocks and stochastic diagonal blocks."""
    n = emb.n
    phi = phi_matrix(emb)
    w = np.zeros((n * n, n * n), dtype=complex)
    for i in range(n):
        for j in range(n):
            if i == j:
                block = np.diag((n - 1) * phi[i, :]).astype(complex)
            else:
                block = -_unit(i, j, n)
            w += kron(_unit(i, j, n), block)
    return Witness(n=n, operator=w)


def max_entangled_projector(n: int) -> np.ndarray:
    """Projector onto the uniform maximally entangled vector of C^n x C^n."""
    v = np.zeros(n * n, dtype=complex)
    for i in range(n):
        v[i * n + i] = 1.0
    v /= np.sqrt(n)
    return np.outer(v, v.conj())


def choi_witness(kmap: KossakowskiMap) -> Witness:
    """Witness n(n-1) (id x map) applied to the maximally entangled projector."""
    n = kmap.n
    w = np.zeros((n * n, n * n), dtype=complex)
    for i in range(n):
        for j in range(n):
            w += kron(_unit(i, j, n), kmap.apply(_unit(i, j, n)))
    return Witness(n=n, operator=w * (n - 1))


@dataclass(frozen=True, eq=False)
class WeylSet:
    """Discrete Weyl shift-and-phase unitaries with their entangled vectors.

    unitaries[k, l] is the n x n unitary; vectors[k * n + l] is the
    normalized vector (id x U_kl) applied to the uniform maximally entangled
    vector. The n*n rank-one projectors onto these vectors are mutually
    orthogonal and resolve the identity.
    """

    n: int
    unitaries: np.ndarray
    vectors: np.ndarray


def build_weyl_set(n: int) -> WeylSet:
    """Construct all n*n shift-and-phase unitaries and their vectors."""
    omega = np.exp(2j * np.pi / n)
    unitaries = np.zeros((n, n, n, n), dtype=complex)
    vectors = np.zeros((n * n, n * n), dtype=complex)
    for k in range(n):
        for l in range(n):
            u = np.zeros((n, n), dtype=complex)
            for m in range(n):
                # ket labels are 1-based in the phase exponent
                u[m, (m + l) % n] = omega ** (k * (m + 1))
            unitaries[k, l] = u
            v = np.zeros(n * n, dtype=complex)
            for i in range(n):
                v[i * n : (i + 1) * n] = u[:, i]
            vectors[k * n + l] = v / np.sqrt(n)
    return WeylSet(n=n, unitaries=unitaries, vectors=vectors)


def twirl(w: Witness, weyl: WeylSet | None = None) -> Witness:
    """Project the witness onto the span of the Weyl entangled projectors."""
    if weyl is None:
        weyl = build_weyl_set(w.n)
    if weyl.n != w.n:
        raise ValueError(f"dimension mismatch: witness n={w.n}, weyl n={weyl.n}")
    out = np.zeros_like(w.operator)
    for v in weyl.vectors:
        weight = float((v.conj() @ w.operator @ v).real)
        out += weight * np.outer(v, v.conj())
    return Witness(n=w.n, operator=out)
