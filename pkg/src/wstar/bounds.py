"""Linear-programming feasibility bounds for detection codes.

A k-dimensional code detecting grades 1..s forces its B vector to sit
in a polytope: B >= 0, B_0 fixed by normalization, and k B_d - A_d = 0
for d <= s (>= 0 above s) with A expressed through B by the 6j
transform.  Emptiness of that polytope rules the pair (s, k) out, so
scanning k gives an upper bound on achievable code dimension.

Feasibility is decided by a dense phase-I simplex with Bland's rule;
the instances here are tiny (at most a few dozen rows), so numerical
robustness beats speed.
"""

from dataclasses import dataclass, field

import numpy as np

from .enumerators import transform_matrix


@dataclass(frozen=True)
class LPInstance:
    """Feasibility system a_eq x = b_eq, a_ge x >= b_ge, x >= 0."""

    two_j: int
    s: int
    k: int
    a_eq: np.ndarray
    b_eq: np.ndarray
    a_ge: np.ndarray
    b_ge: np.ndarray

    @property
    def n_vars(self) -> int:
        return self.a_eq.shape[1] if self.a_eq.size else self.a_ge.shape[1]


def build_lp(two_j: int, s: int, k: int) -> LPInstance:
    """Polytope for a putative (detect s, dim k) code at spin j.

    Variables are B_0..B_2j.  Row d is k e_d - T[d] (T the 6j transform
    carrying B to A): equality for d <= s, inequality for d > s.  The
    last equality pins B_0 = k / (2j+1), the value forced by any rank-k
    projection.
    """
    if two_j < 0 or not 0 <= s <= two_j:
        raise ValueError(f"need 0 <= s <= two_j, got s={s}, two_j={two_j}")
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    n = two_j + 1
    t = transform_matrix(two_j)
    rows = k * np.eye(n) - t
    a_eq = np.vstack([rows[: s + 1], np.eye(n)[:1]])
    b_eq = np.concatenate([np.zeros(s + 1), [k / n]])
    a_ge = rows[s + 1:]
    b_ge = np.zeros(len(a_ge))
    return LPInstance(two_j, s, k, a_eq, b_eq, a_ge, b_ge)


def _phase1(lp: LPInstance, tol: float):
    """Phase-I simplex.  Returns (feasible, point or None)."""
    a = np.vstack([x for x in (lp.a_eq, lp.a_ge) if x.size]) if (lp.a_eq.size or lp.a_ge.size) else np.zeros((0, lp.n_vars))
    m_eq = len(lp.a_eq)
    m = len(a)
    n = lp.n_vars
    n_ge = m - m_eq
    # standard form: original vars, then surplus vars for the >= rows
    width = n + n_ge
    tab = np.zeros((m, width))
    tab[:, :n] = a
    for i in range(n_ge):
        tab[m_eq + i, n + i] = -1.0
    rhs = np.concatenate([lp.b_eq, lp.b_ge]).astype(float)
    neg = rhs < 0
    tab[neg] *= -1.0
    rhs = np.abs(rhs)

    # artificial basis: one artificial per row, cost 1 each
    full = np.hstack([tab, np.eye(m)])
    cost = np.concatenate([np.zeros(width), np.ones(m)])
    basis = list(range(width, width + m))

    for _ in range(200 * (m + width) + 200):
        red = cost - cost[basis] @ full
        enter = -1
        for j in range(width + m):
            if red[j] < -1e-9:
                enter = j  # Bland: first improving column
                break
        if enter < 0:
            break
        best = None
        for i in range(m):
            piv = full[i, enter]
            if piv > 1e-11:
                ratio = rhs[i] / piv
                if best is None or ratio < best[0] - 1e-12 or (
                    abs(ratio - best[0]) <= 1e-12 and basis[i] < basis[best[1]]
                ):
                    best = (ratio, i)
        if best is None:
            raise RuntimeError("phase-I objective unbounded; inconsistent tableau")
        _, leave = best
        piv = full[leave, enter]
        full[leave] /= piv
        rhs[leave] /= piv
        for i in range(m):
            if i != leave and full[i, enter] != 0.0:
                rhs[i] -= full[i, enter] * rhs[leave]
                full[i] -= full[i, enter] * full[leave]
        basis[leave] = enter
    else:
        raise RuntimeError("simplex failed to terminate")

    residual = sum(rhs[i] for i in range(m) if basis[i] >= width)
    if residual > tol:
        return False, None
    point = np.zeros(width)
    for i, b in enumerate(basis):
        if b < width:
            point[b] = rhs[i]
    return True, point[:n]


def feasible(lp: LPInstance, tol: float = 1e-7):
    """Decide the system; returns (bool, witness B or None)."""
    ok, point = _phase1(lp, tol)
    return ok, point


@dataclass(frozen=True)
class BoundReport:
    two_j: int
    s: int
    k_max: int
    feasible_point: np.ndarray | None
    per_k: tuple = field(default_factory=tuple)


def max_k(two_j: int, s: int, tol: float = 1e-7) -> BoundReport:
    """Largest k in 1..2j whose detection polytope is nonempty.

    Scans every k (the polytopes are not nested in k, so no early out),
    returning the witness vector for the largest feasible k.  k_max = 0
    means even a one-dimensional code is excluded.
    """
    results = []
    best_k = 0
    best_point = None
    for k in range(1, max(two_j, 0) + 1):
        ok, point = feasible(build_lp(two_j, s, k), tol)
        results.append((k, ok))
        if ok:
            best_k, best_point = k, point
    return BoundReport(two_j, s, best_k, best_point, tuple(results))
