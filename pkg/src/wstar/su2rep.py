"""Irreducible su(2) representations and their tensor-operator bases.

Spins are passed as doubled integers (two_j = 2j) so that half-integer
labels stay exact.  Matrices act on the weight basis ordered by
descending weight: index i holds the weight m = j - i, so h is diagonal
with spectrum j, j-1, ..., -j.  Conventions: [h, e] = e, [h, f] = -f,
[e, f] = 2h, with e = f* and the lowering amplitudes positive
(Condon-Shortley).
"""

from dataclasses import dataclass, field

import numpy as np

from .matcore import SubspaceBasis, hs_norm


def c_plus(a: float, m: float) -> float:
    """Raising amplitude sqrt(a(a+1) - m(m+1))."""
    return float(np.sqrt(a * (a + 1) - m * (m + 1)))


def c_minus(a: float, m: float) -> float:
    """Lowering amplitude sqrt(a(a+1) - m(m-1))."""
    return float(np.sqrt(a * (a + 1) - m * (m - 1)))


@dataclass(frozen=True)
class Irrep:
    """The spin-(two_j/2) irreducible representation on C^(two_j+1)."""

    two_j: int
    dim: int
    h: np.ndarray = field(repr=False)
    e: np.ndarray = field(repr=False)
    f: np.ndarray = field(repr=False)


def build_irrep(two_j: int) -> Irrep:
    """Generators h, e, f of the spin-(two_j/2) irrep."""
    if not isinstance(two_j, (int, np.integer)) or two_j < 0:
        raise ValueError(f"two_j must be a nonnegative integer, got {two_j!r}")
    two_j = int(two_j)
    dim = two_j + 1
    j = two_j / 2
    m = j - np.arange(dim)
    h = np.diag(m).astype(complex)
    f = np.zeros((dim, dim), complex)
    for i in range(dim - 1):
        f[i + 1, i] = c_minus(j, m[i])
    e = f.conj().T
    return Irrep(two_j, dim, h, e, f)


def casimir(rep: Irrep) -> np.ndarray:
    """Casimir element h^2 + (ef + fe)/2; equals j(j+1) I on the irrep."""
    return rep.h @ rep.h + 0.5 * (rep.e @ rep.f + rep.f @ rep.e)


@dataclass(frozen=True)
class TensorOpBasis:
    """Orthonormal spin-d tensor operators inside B(C^(two_j+1)).

    ops[i] is the component of ad-h weight d - i, so the list runs
    M_d, M_{d-1}, ..., M_{-d}.
    """

    two_j: int
    d: int
    ops: np.ndarray = field(repr=False)

    def op(self, k: int) -> np.ndarray:
        """Component with ad-h weight k."""
        if abs(k) > self.d:
            raise ValueError(f"weight {k} outside [-{self.d}, {self.d}]")
        return self.ops[self.d - k]


def tensor_op_basis(rep: Irrep, d: int) -> TensorOpBasis:
    """Spin-d multiplet of B(C^n): top component e^d normalized, then lowered.

    The lowering is in the adjoint action, ad[f](X) = fX - Xf, with the
    same amplitudes c_minus(d, k) as a spin-d column vector, so the 2d+1
    components come out orthonormal and satisfy ad[h](M_k) = k M_k.
    """
    if not 0 <= d <= rep.two_j:
        raise ValueError(f"grade d={d} outside [0, {rep.two_j}]")
    top = np.linalg.matrix_power(rep.e, d)
    ops = np.empty((2 * d + 1, rep.dim, rep.dim), complex)
    ops[0] = top / hs_norm(top)
    for k in range(d, -d, -1):
        cur = ops[d - k]
        ops[d - k + 1] = (rep.f @ cur - cur @ rep.f) / c_minus(d, k)
    return TensorOpBasis(rep.two_j, d, ops)


def ad_weight_decompose(rep: Irrep) -> list[tuple[int, SubspaceBasis]]:
    """Split B(C^n) into ad-h weight spaces.

    Weight lam collects the matrix units |i><j| with m_i - m_j = lam,
    i.e. the lam-th superdiagonal; these are already orthonormal.
    Returns (lam, basis) pairs for lam = -two_j ... two_j.
    """
    n = rep.dim
    out = []
    for lam in range(-rep.two_j, rep.two_j + 1):
        count = n - abs(lam)
        units = np.zeros((count, n, n), complex)
        for t in range(count):
            i, jj = (t, t + lam) if lam >= 0 else (t - lam, t)
            units[t, i, jj] = 1.0
        out.append((lam, SubspaceBasis(n, units)))
    return out
