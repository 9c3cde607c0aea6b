"""Distance codes in spin representations, with recovery channels.

A code here is a k-dimensional subspace of the spin-(two_j/2) space
whose projection P satisfies the detection condition PXP = c(X) P for
every operator X in a chosen filtration grade.  The construction places
codewords on an arithmetic progression of weight-basis states, spacing
s+1 so that every off-diagonal grade-s operator is killed outright, and
weights the amplitudes with Tverberg coefficients so that the diagonal
moments up to degree s agree across codewords.  Recovery follows the
standard polar-decomposition route: diagonalize the error Gram matrix
on the code, turn each nonzero direction into an isometry, and dump the
unreachable remainder onto a fixed codeword.
"""

from dataclasses import dataclass, field

import numpy as np

from .filtration import Filtration
from .matcore import DEFAULT_TOL, ShapeError, SubspaceBasis, hs_norm, membership_residual, orthonormalize
from .randmat import random_complex, random_positive, random_state
from .tverberg import construct


class CapacityError(ValueError):
    """Requested parameters cannot fit in the representation."""

    def __init__(self, two_j: int, s: int, k: int, min_dim: int):
        self.min_dim = min_dim
        super().__init__(
            f"(s={s}, k={k}) needs weight-space dimension 2l+1 >= {min_dim}, got {two_j + 1}"
        )


class NotCorrectableError(ValueError):
    """The code does not detect the products of the given errors."""

    def __init__(self, residual: float):
        self.residual = residual
        super().__init__(f"error products are not detected (worst residual {residual:.3e})")


def select_weights(two_j: int, s: int, k: int) -> list[int]:
    """Arithmetic weight-index support: (s+1)(k-1)+1 indices, spacing s+1,
    anchored at the highest weight (index 0)."""
    if s < 0 or k < 1:
        raise ValueError(f"need s >= 0 and k >= 1, got s={s}, k={k}")
    min_dim = (s + 1) ** 2 * (k - 1) + 1
    if two_j + 1 < min_dim:
        raise CapacityError(two_j, s, k, min_dim)
    count = (s + 1) * (k - 1) + 1
    return [(s + 1) * i for i in range(count)]


@dataclass(frozen=True)
class Code:
    """k orthonormal codewords on disjoint weight supports, plus their
    projection."""

    two_j: int
    detect_grade: int
    k: int
    vectors: np.ndarray = field(repr=False)  # (2l+1, k), columns are codewords
    projection: np.ndarray = field(repr=False)
    weight_support: tuple


def build_code(two_j: int, s: int, k: int) -> Code:
    """Code detecting filtration grade s with k codewords.

    Support indices come from select_weights; the amplitude on support
    point i is the positive square root of its Tverberg coefficient and
    the codeword it belongs to is i mod k.  For s = 0 the partition
    degenerates to singletons (bare weight vectors).
    """
    support = select_weights(two_j, s, k)
    n = two_j + 1
    if s == 0:
        color = list(range(k))
        coeff = [1.0] * k
    else:
        part = construct(s, k)
        color = list(part.color)
        coeff = [float(c) for c in part.coeff]
    vectors = np.zeros((n, k), complex)
    for i, idx in enumerate(support):
        vectors[idx, color[i]] = np.sqrt(coeff[i])
    return Code(two_j, s, k, vectors, vectors @ vectors.conj().T, tuple(support))


@dataclass(frozen=True)
class DetectionReport:
    grade: float
    max_residual: float
    passed: bool


def verify_detection(code: Code, filt: Filtration, grade, tol: float = DEFAULT_TOL) -> DetectionReport:
    """Check PXP = c(X) P over the basis of the given filtration grade.

    With a scalar zero term the constant is forced: c(X) = Tr(PX)/k and
    the residual is ||PXP - c(X) P|| / max(1, ||X||).  For a classical
    (diagonal) zero term the check is membership of PXP in span(E_0 P).
    """
    n = code.two_j + 1
    if filt.ambient_dim != n:
        raise ShapeError(f"filtration ambient dim {filt.ambient_dim} != code dim {n}")
    basis = filt.basis_at(grade)
    p = code.projection
    e0 = filt.grades[0][1]
    worst = 0.0
    if e0.dim == 1:
        for x in basis:
            pxp = p @ x @ p
            c = np.trace(p @ x) / code.k
            worst = max(worst, hs_norm(pxp - c * p) / max(1.0, hs_norm(x)))
    else:
        span = orthonormalize([b @ p for b in e0], tol=tol, ambient_dim=n)
        for x in basis:
            worst = max(worst, membership_residual(span, p @ x @ p))
    return DetectionReport(grade, worst, worst < tol)


@dataclass(frozen=True)
class RecoveryChannel:
    """Trace-preserving recovery map R(rho) = sum_a A_a* rho A_a + O(rho).

    kraus_in[a] is the map A_a*: ambient -> code space; the completion O
    sends the mass of the completion projector to codeword 0.
    """

    code: Code
    kraus_in: tuple  # of (k, n) arrays
    completion_projector: np.ndarray = field(repr=False)
    completion: str = "route complement mass to |c0><c0|"

    def apply(self, rho: np.ndarray) -> np.ndarray:
        """Corrected state, returned in the ambient space (supported on C)."""
        v = self.code.vectors
        out = np.zeros((self.code.k, self.code.k), complex)
        for a in self.kraus_in:
            out += a @ rho @ a.conj().T
        out[0, 0] += np.trace(self.completion_projector @ rho)
        return v @ out @ v.conj().T

    def completeness_residual(self) -> float:
        """|| sum_a A_a A_a* + Q - 1 || over the ambient space."""
        n = self.code.two_j + 1
        total = sum(a.conj().T @ a for a in self.kraus_in) + self.completion_projector
        return hs_norm(total - np.eye(n))


def build_recovery(code: Code, errors: SubspaceBasis, tol: float = DEFAULT_TOL) -> RecoveryChannel:
    """Kraus directions for correcting a span of errors.

    Requires the code to detect every product F_a* F_b of error basis
    elements with a scalar constant; the Gram matrix of those constants
    is diagonalized, directions with eigenvalue above 1e-10 of the
    largest become isometries E_a restricted to the code, and the rest
    of the space is handled by the completion.
    """
    n = code.two_j + 1
    if errors.ambient_dim != n:
        raise ShapeError(f"error ambient dim {errors.ambient_dim} != code dim {n}")
    p = code.projection
    v = code.vectors
    m = errors.dim
    f = errors.elements
    gram = np.empty((m, m), complex)
    worst = 0.0
    for a in range(m):
        for b in range(m):
            prod = f[a].conj().T @ f[b]
            pfp = p @ prod @ p
            gram[a, b] = np.trace(p @ prod) / code.k
            worst = max(worst, hs_norm(pfp - gram[a, b] * p) / max(1.0, hs_norm(prod)))
    if worst >= tol:
        raise NotCorrectableError(worst)

    lam, u = np.linalg.eigh(gram)
    cut = 1e-10 * float(lam.max())
    kraus = []
    for a in range(m):
        if lam[a] > cut:
            e_a = np.einsum("b,bij->ij", u[:, a], f) / np.sqrt(lam[a])
            kraus.append((e_a @ v).conj().T)
    total = sum(a.conj().T @ a for a in kraus)
    q_raw = np.eye(n) - total
    w, qv = np.linalg.eigh((q_raw + q_raw.conj().T) / 2)
    span = qv[:, w > 0.5]
    q = span @ span.conj().T
    return RecoveryChannel(code, tuple(kraus), q)


@dataclass(frozen=True)
class RecoveryReport:
    trials: int
    max_residual: float
    completeness_residual: float
    passed: bool


def verify_recovery(
    ch: RecoveryChannel,
    errors: SubspaceBasis,
    trials: int,
    seed: int,
    tol: float = 1e-8,
    completeness_tol: float = 1e-10,
) -> RecoveryReport:
    """Random-trial check that R(E rho F*) is proportional to rho.

    Each trial draws a positive state on the code space and independent
    Gaussian combinations E, F of the error basis from the stream keyed
    by (seed, trial), then compares R(E rho F*) against tau rho with
    tau = Tr R(E rho F*) / Tr rho.  Kraus completeness is checked once.
    """
    v = ch.code.vectors
    k = ch.code.k
    worst = 0.0
    for i in range(trials):
        rng = random_state(seed, i)
        sigma = random_positive(rng, k)
        rho = v @ sigma @ v.conj().T
        rho /= np.trace(rho).real
        ce = random_complex(rng, errors.dim, 1)[:, 0]
        cf = random_complex(rng, errors.dim, 1)[:, 0]
        big_e = np.einsum("a,aij->ij", ce, errors.elements)
        big_f = np.einsum("a,aij->ij", cf, errors.elements)
        out = ch.apply(big_e @ rho @ big_f.conj().T)
        tau = np.trace(out)
        worst = max(worst, hs_norm(out - tau * rho))
    comp = ch.completeness_residual()
    return RecoveryReport(trials, worst, comp, worst < tol and comp < completeness_tol)


def decode(metric, codewords, received: int):
    """Ball decoding: the codeword whose open t/2-ball holds the received
    point, t the minimum codeword separation; otherwise the nearest
    codeword, ties to the lowest-index one."""
    codewords = list(codewords)
    if not codewords:
        raise ValueError("codeword set is empty")
    n = metric.n_points
    for c in codewords + [received]:
        if not 0 <= c < n:
            raise ValueError(f"point {c} outside 0..{n - 1}")
    if len(set(codewords)) != len(codewords):
        raise ValueError("codewords must be distinct")
    d = metric.dist
    if len(codewords) > 1:
        t = min(d[a, b] for i, a in enumerate(codewords) for b in codewords[i + 1:])
    else:
        t = np.inf
    dists = np.array([d[received, c] for c in codewords])
    inside = np.nonzero(dists < t / 2)[0]
    if inside.size:
        return codewords[int(inside[0])]
    return codewords[int(np.argmin(dists))]
