"""Hilbert-Schmidt geometry for spans of complex matrices.

Everything downstream (filtrations, codes, enumerators) manipulates
subspaces of B(C^n) through the trace inner product (a, b) = Tr(a* b).
This module owns that inner product, orthonormalization with rank
detection, membership tests, and products of spans.
"""

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

DEFAULT_TOL = 1e-9


class ShapeError(ValueError):
    """Operands have incompatible dimensions."""


def _as_matrix(a) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {np.shape(a)}")
    return a


def adjoint(a) -> np.ndarray:
    """Conjugate transpose."""
    return _as_matrix(a).conj().T


def hs_inner(a, b) -> complex:
    """Hilbert-Schmidt inner product Tr(a* b), antilinear in the first slot."""
    a = _as_matrix(a)
    b = _as_matrix(b)
    if a.shape != b.shape:
        raise ShapeError(f"shape mismatch {a.shape} vs {b.shape}")
    # vdot conjugates its first argument and sums entrywise, which is Tr(a* b)
    return complex(np.vdot(a, b))


def hs_norm(a) -> float:
    """Frobenius norm, the norm induced by hs_inner."""
    return float(np.linalg.norm(_as_matrix(a)))


@dataclass(frozen=True)
class SubspaceBasis:
    """Orthonormal basis of a subspace of B(C^n).

    elements is a (k, n, n) array; rows are pairwise orthonormal in the
    Hilbert-Schmidt inner product.  tol records the rank tolerance the
    basis was built with.
    """

    ambient_dim: int
    elements: np.ndarray = field(repr=False)
    tol: float = DEFAULT_TOL

    @property
    def dim(self) -> int:
        return self.elements.shape[0]

    @cached_property
    def flat(self) -> np.ndarray:
        # (k, n*n) view used by the vectorized projection paths
        return self.elements.reshape(self.dim, -1)

    def __iter__(self):
        return iter(self.elements)

    def gram(self) -> np.ndarray:
        return self.flat.conj() @ self.flat.T


def orthonormalize(mats, tol: float = DEFAULT_TOL, ambient_dim: int | None = None) -> SubspaceBasis:
    """Orthonormal basis for the span of the given matrices.

    Modified Gram-Schmidt with one re-orthogonalization pass per vector.
    A candidate is dropped when its residual after projection is below
    tol times the largest input norm, so the rank decision is relative
    to the scale of the input set.
    """
    mats = [_as_matrix(m) for m in mats]
    if not mats:
        if ambient_dim is None:
            raise ShapeError("cannot infer ambient dimension from an empty set")
        return SubspaceBasis(ambient_dim, np.zeros((0, ambient_dim, ambient_dim), complex), tol)
    n = mats[0].shape[0]
    for m in mats:
        if m.shape != (n, n):
            raise ShapeError(f"expected square matrices of one size, got {m.shape} after {(n, n)}")
    scale = max(float(np.linalg.norm(m)) for m in mats)
    if scale == 0.0:
        return SubspaceBasis(n, np.zeros((0, n, n), complex), tol)

    vecs = np.stack([m.ravel() for m in mats])
    kept = np.empty((len(vecs), n * n), complex)
    k = 0
    for v in vecs:
        w = v.copy()
        for _ in range(2):  # second pass restores orthogonality lost to cancellation
            if k:
                w -= kept[:k].conj() @ w @ kept[:k]
        r = np.linalg.norm(w)
        if r >= tol * scale:
            kept[k] = w / r
            k += 1
    return SubspaceBasis(n, kept[:k].reshape(k, n, n).copy(), tol)


def membership_residual(basis: SubspaceBasis, m) -> float:
    """Relative distance from m to the span: ||m - proj(m)|| / ||m|| (0 for m = 0)."""
    return float(membership_residuals(basis, [m])[0])


def membership_residuals(basis: SubspaceBasis, mats) -> np.ndarray:
    """Vectorized membership_residual over a batch of matrices."""
    stack = np.stack([_as_matrix(m) for m in mats])
    if stack.shape[1:] != (basis.ambient_dim, basis.ambient_dim):
        raise ShapeError(f"ambient dimension mismatch: {stack.shape[1:]} vs {basis.ambient_dim}")
    flat = stack.reshape(stack.shape[0], -1)
    norms = np.linalg.norm(flat, axis=1)
    if basis.dim == 0:
        resid = norms.copy()
    else:
        coeff = flat @ basis.flat.conj().T
        resid = np.linalg.norm(flat - coeff @ basis.flat, axis=1)
    out = np.zeros_like(norms)
    nz = norms > 0
    out[nz] = resid[nz] / norms[nz]
    return out


def product_span(a: SubspaceBasis, b: SubspaceBasis, tol: float = DEFAULT_TOL) -> SubspaceBasis:
    """Orthonormal basis for span{XY : X in a, Y in b}."""
    if a.ambient_dim != b.ambient_dim:
        raise ShapeError(f"ambient dimension mismatch: {a.ambient_dim} vs {b.ambient_dim}")
    n = a.ambient_dim
    if a.dim == 0 or b.dim == 0:
        return SubspaceBasis(n, np.zeros((0, n, n), complex), tol)
    prods = np.einsum("aij,bjk->abik", a.elements, b.elements).reshape(-1, n, n)
    return orthonormalize(prods, tol=tol)


def max_principal_angle(a: SubspaceBasis, b: SubspaceBasis) -> float:
    """Largest principal angle between two spans, in radians.

    Computed from sines (largest singular value of the component of one
    basis orthogonal to the other span), which stays accurate for nearly
    equal subspaces where the cosine formulation loses all precision.
    """
    if a.ambient_dim != b.ambient_dim:
        raise ShapeError(f"ambient dimension mismatch: {a.ambient_dim} vs {b.ambient_dim}")

    def one_sided(u: SubspaceBasis, v: SubspaceBasis) -> float:
        if u.dim == 0:
            return 0.0
        if v.dim == 0:
            return np.pi / 2
        rest = u.flat - (u.flat @ v.flat.conj().T) @ v.flat
        s = np.linalg.svd(rest, compute_uv=False)[0]
        return float(np.arcsin(min(1.0, s)))

    return max(one_sided(a, b), one_sided(b, a))
