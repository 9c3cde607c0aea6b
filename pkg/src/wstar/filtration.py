"""Operator-space filtrations of B(C^n) and their metric content.

A filtration here is a finite increasing chain of subspaces E_t indexed
by real grades t >= 0, each containing the identity, closed under
adjoints, and submultiplicative: E_s . E_t lies inside E_{s+t}.  The
grade-0 space is an algebra of "distance zero" observables.  Three
constructions are provided: the su(2) chain generated by {1, h, e, f},
the multi-qubit chain graded by Pauli weight, and the commutative chain
attached to a finite metric space, from which the metric can be read
back off.
"""

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .matcore import (
    DEFAULT_TOL,
    SubspaceBasis,
    membership_residual,
    membership_residuals,
    orthonormalize,
    product_span,
)
from .su2rep import Irrep


@dataclass(frozen=True)
class Filtration:
    """Increasing chain of subspaces of B(C^n), labelled by grade."""

    ambient_dim: int
    grades: tuple  # of (label, SubspaceBasis), labels strictly increasing
    kind: str = ""

    def labels(self) -> list[float]:
        return [lab for lab, _ in self.grades]

    def basis_at(self, label) -> SubspaceBasis:
        """Basis of the grade with this exact label."""
        for lab, basis in self.grades:
            if lab == label:
                return basis
        raise KeyError(f"no grade labelled {label!r}")

    def grade_le(self, t: float) -> SubspaceBasis:
        """Basis of E_t: the largest stored grade with label <= t."""
        chosen = None
        for lab, basis in self.grades:
            if lab <= t:
                chosen = basis
        if chosen is None:
            raise KeyError(f"no grade with label <= {t}")
        return chosen

    def top(self) -> SubspaceBasis:
        return self.grades[-1][1]


def su2_filtration(rep: Irrep, tol: float = DEFAULT_TOL, max_grade: int | None = None) -> Filtration:
    """Chain generated by E_1 = span{1, h, e, f} under products.

    Grade t is the span of all products of at most t generators; the
    chain stops once it fills B(C^n) (grade 2j for spin j), or at
    max_grade if that comes first.
    """
    n = rep.dim
    eye = np.eye(n, dtype=complex)
    e0 = orthonormalize([eye], tol=tol)
    grades = [(0, e0)]
    e1 = orthonormalize([eye, rep.h, rep.e, rep.f], tol=tol)
    cur = e0
    t = 0
    while cur.dim < n * n and (max_grade is None or t < max_grade):
        t += 1
        cur = product_span(cur, e1, tol=tol)
        grades.append((t, cur))
    return Filtration(n, tuple(grades), kind="su2")


_PAULIS = [
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
]


def hamming_filtration(n: int) -> Filtration:
    """Pauli-weight chain on n qubits: grade t spans words with at most t
    non-identity tensor factors, each normalized by 2^(-n/2)."""
    if not 1 <= n <= 3:
        raise ValueError(f"qubit count must be in 1..3, got {n}")
    dim = 2**n
    by_weight: list[list[np.ndarray]] = [[] for _ in range(n + 1)]
    for idx in range(4**n):
        digits = [(idx // 4**p) % 4 for p in range(n)]
        word = _PAULIS[digits[0]]
        for dgt in digits[1:]:
            word = np.kron(word, _PAULIS[dgt])
        by_weight[sum(1 for dgt in digits if dgt)].append(word / 2 ** (n / 2))
    grades = []
    acc: list[np.ndarray] = []
    for t in range(n + 1):
        acc = acc + by_weight[t]
        grades.append((t, SubspaceBasis(dim, np.stack(acc))))
    return Filtration(dim, tuple(grades), kind="hamming")


@dataclass(frozen=True)
class FiniteMetric:
    """Finite metric space: point labels plus a distance matrix."""

    labels: tuple
    dist: np.ndarray = field(repr=False)

    @property
    def n_points(self) -> int:
        return len(self.labels)

    def validate(self) -> None:
        d = self.dist
        n = self.n_points
        if d.shape != (n, n):
            raise ValueError(f"distance matrix shape {d.shape} does not match {n} labels")
        if not np.array_equal(d, d.T):
            raise ValueError("distance matrix is not symmetric")
        if np.any(np.diag(d) != 0):
            raise ValueError("diagonal must be zero")
        off = d[~np.eye(n, dtype=bool)]
        if off.size and np.min(off) <= 0:
            raise ValueError("off-diagonal distances must be positive")
        for j in range(n):
            if np.any(d > d[:, j, None] + d[None, j, :]):
                raise ValueError("triangle inequality violated")

    def to_dict(self) -> dict:
        return {"labels": list(self.labels), "dist": self.dist.tolist()}

    @classmethod
    def from_dict(cls, data: dict) -> "FiniteMetric":
        m = cls(tuple(data["labels"]), np.asarray(data["dist"], dtype=float))
        m.validate()
        return m

    @classmethod
    def from_json(cls, text: str) -> "FiniteMetric":
        return cls.from_dict(json.loads(text))


def path_metric(n: int) -> FiniteMetric:
    """Points 0..n-1 on a line, d(i, j) = |i - j|."""
    if n < 1:
        raise ValueError("need at least one point")
    idx = np.arange(n)
    return FiniteMetric(tuple(range(n)), np.abs(idx[:, None] - idx[None, :]).astype(float))


def random_metric(n: int, rng: np.random.Generator, high: int = 9) -> FiniteMetric:
    """Random integer metric: symmetric positive entries repaired into a
    metric by shortest-path closure."""
    raw = rng.integers(1, high + 1, size=(n, n)).astype(float)
    d = np.triu(raw, 1)
    d = d + d.T
    for j in range(n):  # Floyd-Warshall
        d = np.minimum(d, d[:, j, None] + d[None, j, :])
    np.fill_diagonal(d, 0.0)
    m = FiniteMetric(tuple(range(n)), d)
    m.validate()
    return m


def classical_filtration(metric: FiniteMetric) -> Filtration:
    """Commutative chain of a finite metric: grade t spans the matrix
    units |x><y| with d(x, y) <= t, one grade per distinct distance."""
    metric.validate()
    n = metric.n_points
    values = sorted(set(metric.dist.ravel().tolist()))
    grades = []
    for v in values:
        mask = metric.dist <= v
        pairs = np.argwhere(mask)
        units = np.zeros((len(pairs), n, n), complex)
        for t, (i, j) in enumerate(pairs):
            units[t, i, j] = 1.0
        grades.append((v, SubspaceBasis(n, units)))
    return Filtration(n, tuple(grades), kind="classical")


def pure_terms(filt: Filtration, tol: float = DEFAULT_TOL) -> list[tuple[float, SubspaceBasis]]:
    """Orthogonal complement of each grade in the next: the "new at t" part.

    The first grade is returned whole; thereafter grade t contributes
    the component of its basis orthogonal to grade t-1.  The pure terms
    sum (orthogonally) back to the top grade.
    """
    out = []
    prev: SubspaceBasis | None = None
    for label, basis in filt.grades:
        if prev is None:
            out.append((label, basis))
        else:
            rest = basis.flat - (basis.flat @ prev.flat.conj().T) @ prev.flat
            # grade elements are unit vectors, so absolute and relative scale agree
            keep = rest[np.linalg.norm(rest, axis=1) >= tol]
            n = filt.ambient_dim
            out.append((label, orthonormalize(keep.reshape(-1, n, n), tol=tol, ambient_dim=n)))
        prev = basis
    return out


@dataclass(frozen=True)
class AxiomReport:
    """Result of checking the filtration axioms on stored grades.

    The intersection axiom (continuity from the right in t) is vacuous
    for finitely many grades and is not checked.
    """

    identity_ok: bool
    adjoint_ok: bool
    product_ok: bool
    max_residual: float

    @property
    def passed(self) -> bool:
        return self.identity_ok and self.adjoint_ok and self.product_ok


def verify_axioms(filt: Filtration, tol: float = DEFAULT_TOL) -> AxiomReport:
    """Check identity membership, adjoint closure, and E_s E_t <= E_{s+t}
    on every stored grade pair, reporting the worst residual seen."""
    n = filt.ambient_dim
    eye = np.eye(n, dtype=complex)
    full = n * n

    id_res = max(membership_residual(basis, eye) for _, basis in filt.grades)
    adj_res = 0.0
    for _, basis in filt.grades:
        if basis.dim == 0:
            continue
        adj = basis.elements.conj().transpose(0, 2, 1)
        adj_res = max(adj_res, float(membership_residuals(basis, adj).max()))

    prod_res = 0.0
    for ls, bs in filt.grades:
        for lt, bt in filt.grades:
            target = filt.grade_le(ls + lt)
            if target.dim == full:
                continue  # containment in all of B(C^n) is vacuous
            prods = np.einsum("aij,bjk->abik", bs.elements, bt.elements).reshape(-1, n, n)
            prod_res = max(prod_res, float(membership_residuals(target, prods).max()))

    return AxiomReport(
        identity_ok=id_res < tol,
        adjoint_ok=adj_res < tol,
        product_ok=prod_res < tol,
        max_residual=max(id_res, adj_res, prod_res),
    )


def metric_from_filtration(filt: Filtration, tol: float = DEFAULT_TOL) -> FiniteMetric:
    """Read distances back off a commutative filtration.

    d(p, q) is the smallest grade label whose span touches the (p, q)
    matrix slot; pairs no grade connects come out +inf.  Inverse to
    classical_filtration on valid metrics.
    """
    n = filt.ambient_dim
    dist = np.full((n, n), math.inf)
    np.fill_diagonal(dist, 0.0)
    for label, basis in filt.grades:
        if basis.dim == 0:
            continue
        touched = (np.abs(basis.elements) > tol).any(axis=0)
        dist = np.where(np.isinf(dist) & touched, label, dist)
    return FiniteMetric(tuple(range(n)), dist)
