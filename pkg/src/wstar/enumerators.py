"""Recoupling coefficients and distance enumerators for spin systems.

Half-integer spins are passed as doubled integers everywhere (two_j =
2j), which keeps triangle tests exact.  The 6j engine works in exact
integer arithmetic: the Racah alternating sum cancels catastrophically
in floating point, so the value is assembled as sign * sqrt(rational)
with only the final square root floating.

The weight vectors A_d and B_d are the rescaled enumerators of a pair
of operators against the spin-d tensor multiplets, and are tied to each
other by a 6j transform (checked, not assumed, in the test suite).
"""

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .filtration import FiniteMetric, Filtration, pure_terms
from .matcore import ShapeError, hs_norm
from .su2rep import build_irrep, c_minus, c_plus, tensor_op_basis


def _triad_ok(ta: int, tb: int, tc: int) -> bool:
    if ta < 0 or tb < 0 or tc < 0:
        return False
    if (ta + tb + tc) % 2:
        return False
    return abs(ta - tb) <= tc <= ta + tb


def _delta_sq(ta: int, tb: int, tc: int) -> Fraction:
    return Fraction(
        math.factorial((ta + tb - tc) // 2)
        * math.factorial((ta - tb + tc) // 2)
        * math.factorial((-ta + tb + tc) // 2),
        math.factorial((ta + tb + tc) // 2 + 1),
    )


@dataclass(frozen=True)
class SixJ:
    """A 6j value sign * sqrt(exact_square), with the exact square kept."""

    two_js: tuple
    value: float
    sign: int
    exact_square: Fraction


@lru_cache(maxsize=None)
def sixj(two_a: int, two_b: int, two_c: int, two_d: int, two_e: int, two_f: int) -> SixJ:
    """Wigner 6j symbol {a b c; d e f}, arguments doubled.

    Racah single-sum form: the product of four triangle factors times
    sum_t (-1)^t (t+1)! / [prod (t - S_i)! * prod (Q_j - t)!], S_i the
    triad sums and Q_j the quad sums.  Invalid triads give 0.
    """
    args = (two_a, two_b, two_c, two_d, two_e, two_f)
    triads = [
        (two_a, two_b, two_c),
        (two_a, two_e, two_f),
        (two_d, two_b, two_f),
        (two_d, two_e, two_c),
    ]
    if not all(_triad_ok(*tr) for tr in triads):
        return SixJ(args, 0.0, 0, Fraction(0))
    s_vals = [(ta + tb + tc) // 2 for ta, tb, tc in triads]
    q_vals = [
        (two_a + two_b + two_d + two_e) // 2,
        (two_b + two_c + two_e + two_f) // 2,
        (two_c + two_a + two_f + two_d) // 2,
    ]
    total = Fraction(0)
    for t in range(max(s_vals), min(q_vals) + 1):
        num = math.factorial(t + 1)
        den = 1
        for s in s_vals:
            den *= math.factorial(t - s)
        for q in q_vals:
            den *= math.factorial(q - t)
        total += Fraction(-num if t % 2 else num, den)
    sign = 0 if total == 0 else (1 if total > 0 else -1)
    square = total**2
    for tr in triads:
        square *= _delta_sq(*tr)
    return SixJ(args, sign * math.sqrt(float(square)), sign, square)


def cg_coefficients(two_a: int, two_b: int, two_j: int) -> dict:
    """Clebsch-Gordan table for coupling a x b to j.

    Returns {two_m: {two_k: coefficient}} where the coefficient carries
    |a k> x |b (m-k)> into |(ab) j m>.  The top state solves e|jj> = 0
    in the weight-j product space with the stretched component (k = a)
    positive; lower states follow by applying f with its usual
    normalization.  A violated triangle returns an empty table.
    """
    if not _triad_ok(two_a, two_b, two_j):
        return {}

    def k_range(two_m):
        lo = max(-two_a, two_m - two_b)
        hi = min(two_a, two_m + two_b)
        return list(range(lo, hi + 1, 2))

    ks = k_range(two_j)
    targets = k_range(two_j + 2)
    amat = np.zeros((len(targets), len(ks)))
    col = {k: i for i, k in enumerate(ks)}
    row = {k: i for i, k in enumerate(targets)}
    for k in ks:
        q = two_j - k
        if k + 2 in row:  # raise the first factor
            amat[row[k + 2], col[k]] += c_plus(two_a / 2, k / 2)
        if k in row:  # raise the second factor
            amat[row[k], col[k]] += c_plus(two_b / 2, q / 2)
    if len(targets):
        _, _, vt = np.linalg.svd(amat)
        vec = vt[-1]
    else:
        vec = np.ones(1)
    vec = vec / np.linalg.norm(vec)
    if vec[col[two_a]] < 0:  # stretched component positive
        vec = -vec

    table = {two_j: {k: float(vec[col[k]]) for k in ks}}
    cur = dict(table[two_j])
    for two_m in range(two_j, -two_j + 1, -2):
        nxt: dict[int, float] = {}
        for k, x in cur.items():
            q = two_m - k
            down = c_minus(two_j / 2, two_m / 2)
            if abs(k - 2) <= two_a:
                nxt[k - 2] = nxt.get(k - 2, 0.0) + x * c_minus(two_a / 2, k / 2) / down
            if abs(q - 2) <= two_b:
                nxt[k] = nxt.get(k, 0.0) + x * c_minus(two_b / 2, q / 2) / down
        cur = nxt
        table[two_m - 2] = dict(nxt)
    return table


@lru_cache(maxsize=8)
def _multiplets(two_j: int) -> tuple:
    rep = build_irrep(two_j)
    return tuple(tensor_op_basis(rep, d).ops for d in range(two_j + 1))


def _check_pair(two_j: int, x, y) -> tuple[np.ndarray, np.ndarray]:
    n = two_j + 1
    x = np.asarray(x, dtype=complex)
    y = np.asarray(y, dtype=complex)
    if x.shape != (n, n) or y.shape != (n, n):
        raise ShapeError(f"operands must be {n}x{n}, got {x.shape} and {y.shape}")
    return x, y


def weight_B(two_j: int, x, y) -> np.ndarray:
    """Distance-distribution vector B_d = sum_i Tr(M_i* X M_i Y) / sqrt(2d+1),
    d = 0..2j, over the orthonormal tensor multiplets.  Real for
    Hermitian operand pairs; the real part is returned."""
    x, y = _check_pair(two_j, x, y)
    out = np.empty(two_j + 1)
    for d, ops in enumerate(_multiplets(two_j)):
        terms = np.einsum("aji,jk,akl,li->a", ops.conj(), x, ops, y, optimize=True)
        out[d] = terms.sum().real / math.sqrt(2 * d + 1)
    return out


def weight_A(two_j: int, x, y) -> np.ndarray:
    """Weight vector A_d = sum_i Tr(M_i* X) Tr(M_i Y) / sqrt(2d+1)."""
    x, y = _check_pair(two_j, x, y)
    out = np.empty(two_j + 1)
    for d, ops in enumerate(_multiplets(two_j)):
        tx = np.einsum("aji,ji->a", ops.conj(), x)
        ty = np.einsum("aij,ji->a", ops, y)
        out[d] = (tx * ty).sum().real / math.sqrt(2 * d + 1)
    return out


@dataclass(frozen=True)
class WeightTable:
    two_j: int
    A: np.ndarray
    B: np.ndarray
    operands: str = ""


def weight_table(two_j: int, x, y, operands: str = "") -> WeightTable:
    return WeightTable(two_j, weight_A(two_j, x, y), weight_B(two_j, x, y), operands)


def transform_matrix(two_j: int) -> np.ndarray:
    """Matrix T carrying B to A: A_d = sum_e T[d,e] B_e.

    T[d,e] = (-1)^(2j-d-e) sqrt((2e+1)(2d+1)) {j j d; j j e}.  The phase
    must carry both grades: it is what makes T an involution (via 6j
    orthogonality) and the only choice consistent with direct evaluation
    of A and B on low-spin cases, both of which the tests pin down.
    """
    n = two_j + 1
    t = np.empty((n, n))
    for d in range(n):
        for e in range(n):
            phase = -1.0 if (two_j + d + e) % 2 else 1.0
            t[d, e] = phase * math.sqrt((2 * e + 1) * (2 * d + 1)) * sixj(
                two_j, two_j, 2 * d, two_j, two_j, 2 * e
            ).value
    return t


def macwilliams_check(two_j: int, x, y) -> float:
    """Worst deviation over d of A_d from the 6j transform of B."""
    a = weight_A(two_j, x, y)
    b = weight_B(two_j, x, y)
    return float(np.max(np.abs(a - transform_matrix(two_j) @ b)))


@dataclass(frozen=True)
class RainsReport:
    lhs: float
    rhs: float
    gap: float


def rains_check(p, m) -> RainsReport:
    """Projection inequality K Tr(M* P M P) >= |Tr(M P)|^2, K = rank P.

    The gap is zero exactly when P detects M (PMP proportional to P).
    """
    p = np.asarray(p, dtype=complex)
    m = np.asarray(m, dtype=complex)
    if p.shape != m.shape or p.ndim != 2 or p.shape[0] != p.shape[1]:
        raise ShapeError(f"need square matrices of equal size, got {p.shape} and {m.shape}")
    if hs_norm(p - p.conj().T) > 1e-10 or hs_norm(p @ p - p) > 1e-10:
        raise ValueError("P is not a projection (within 1e-10)")
    k = round(np.trace(p).real)
    lhs = k * np.trace(m.conj().T @ p @ m @ p).real
    rhs = abs(np.trace(m @ p)) ** 2
    return RainsReport(lhs, rhs, lhs - rhs)


def classical_distribution(metric: FiniteMetric, subset) -> dict:
    """Ordered-pair distance counts {d(x,y): count} over subset x subset."""
    pts = list(subset)
    if not pts:
        raise ValueError("subset is empty")
    if len(set(pts)) != len(pts):
        raise ValueError("subset points must be distinct")
    for x in pts:
        if not 0 <= x < metric.n_points:
            raise ValueError(f"point {x} outside 0..{metric.n_points - 1}")
    counts = Counter(float(metric.dist[x, y]) for x in pts for y in pts)
    return dict(sorted(counts.items()))


def distance_distribution(filt: Filtration, x, y) -> dict:
    """Unnormalized sandwich form per pure grade: label -> sum_b Tr(b* X b Y).

    For a classical filtration and X = Y = a subset projection this
    reproduces classical_distribution exactly, since the pure-term bases
    are matrix units and every term is 0 or 1.
    """
    n = filt.ambient_dim
    x = np.asarray(x, dtype=complex)
    y = np.asarray(y, dtype=complex)
    if x.shape != (n, n) or y.shape != (n, n):
        raise ShapeError(f"operands must be {n}x{n}, got {x.shape} and {y.shape}")
    out = {}
    for label, basis in pure_terms(filt):
        if basis.dim == 0:
            out[label] = 0.0
            continue
        terms = np.einsum("aji,jk,akl,li->a", basis.elements.conj(), x, basis.elements, y, optimize=True)
        out[label] = float(terms.sum().real)
    return out
