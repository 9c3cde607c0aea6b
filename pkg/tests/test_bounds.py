import itertools
import math

import numpy as np
import pytest

from wstar import LPInstance, build_code, build_irrep, build_lp, feasible, max_k, sixj, weight_B


def vertex_feasible(lp: LPInstance, tol: float = 1e-7) -> bool:
    """Exhaustive vertex search: independent feasibility oracle.

    The feasible set {x >= 0, A_eq x = b_eq, A_ge x >= b_ge} contains no
    line, so if it is nonempty some vertex satisfies n constraints with
    equality.  Try every n-subset of constraint hyperplanes; any
    solution of the active system that satisfies everything proves
    feasibility, and completeness follows from the vertex argument.
    """
    n = lp.n_vars
    rows = [(np.asarray(a, float), float(b), True) for a, b in zip(lp.a_eq, lp.b_eq)]
    rows += [(np.asarray(a, float), float(b), False) for a, b in zip(lp.a_ge, lp.b_ge)]
    for i in range(n):
        e = np.zeros(n)
        e[i] = 1.0
        rows.append((e, 0.0, False))

    def satisfies(x):
        if np.min(x) < -tol:
            return False
        for a, b, is_eq in rows:
            v = a @ x
            if is_eq and abs(v - b) > tol:
                return False
            if not is_eq and v < b - tol:
                return False
        return True

    for active in itertools.combinations(range(len(rows)), n):
        a = np.array([rows[i][0] for i in active])
        b = np.array([rows[i][1] for i in active])
        try:
            x = np.linalg.solve(a, b)
        except np.linalg.LinAlgError:
            continue
        if satisfies(x):
            return True
    return False


def test_build_lp_structure():
    lp = build_lp(5, 2, 2)
    # grades 0..5: equality rows for d <= 2 plus the normalization row
    assert lp.n_vars == 6
    assert lp.a_eq.shape == (4, 6)
    assert lp.a_ge.shape == (3, 6)
    assert lp.b_eq[-1] == pytest.approx(2 / 6)
    assert np.array_equal(lp.a_eq[-1], np.eye(6)[0])
    # row d carries k on the diagonal minus the 6j transform entry
    for d in range(3):
        for e in range(6):
            phase = -1.0 if (5 + d + e) % 2 else 1.0
            t_de = phase * math.sqrt((2 * e + 1) * (2 * d + 1)) * sixj(5, 5, 2 * d, 5, 5, 2 * e).value
            want = (2.0 if d == e else 0.0) - t_de
            assert lp.a_eq[d, e] == pytest.approx(want, abs=1e-14)


def test_build_lp_validation():
    with pytest.raises(ValueError):
        build_lp(3, 4, 1)
    with pytest.raises(ValueError):
        build_lp(3, -1, 1)
    with pytest.raises(ValueError):
        build_lp(3, 1, 0)


def test_contradictory_instance_infeasible():
    # B_0 = 1 and B_0 = 2 cannot hold together
    lp = LPInstance(
        0, 0, 1,
        np.array([[1.0], [1.0]]), np.array([1.0, 2.0]),
        np.zeros((0, 1)), np.zeros(0),
    )
    ok, point = feasible(lp)
    assert not ok and point is None


def test_simple_feasible_instance_returns_witness():
    # x1 + x2 = 1, x1 - x2 >= 0, x >= 0
    lp = LPInstance(
        0, 0, 1,
        np.array([[1.0, 1.0]]), np.array([1.0]),
        np.array([[1.0, -1.0]]), np.zeros(1),
    )
    ok, point = feasible(lp)
    assert ok
    assert point.sum() == pytest.approx(1.0)
    assert point[0] >= point[1] - 1e-9


def test_code_weight_vector_is_a_witness():
    # the (4,1,2) code's own B vector satisfies its LP rows
    code = build_code(4, 1, 2)
    b = weight_B(4, code.projection, code.projection)
    lp = build_lp(4, 1, 2)
    assert np.max(np.abs(lp.a_eq @ b - lp.b_eq)) < 1e-12
    assert np.min(lp.a_ge @ b - lp.b_ge) > -1e-12
    assert np.min(b) > -1e-12
    ok, _ = feasible(lp)
    assert ok


def test_simplex_agrees_with_vertex_enumeration():
    # all instances with at most 4 variables, plus the hand cases
    for two_j in range(1, 4):
        for s in range(two_j + 1):
            for k in range(1, 6):
                lp = build_lp(two_j, s, k)
                assert feasible(lp)[0] == vertex_feasible(lp), (two_j, s, k)


def test_max_k_scan():
    report = max_k(4, 1)
    assert report.k_max >= 2
    assert [k for k, _ in report.per_k] == [1, 2, 3, 4]
    assert report.feasible_point is not None
    assert all(ok for k, ok in report.per_k if k <= report.k_max)
    # degenerate spin: nothing to scan
    empty = max_k(0, 0)
    assert empty.k_max == 0 and empty.per_k == ()


def test_max_k_respects_capacity_intuition():
    # at s = two_j the only survivor should be k = 1
    report = max_k(4, 3)
    assert report.k_max == 1
    assert dict(report.per_k)[2] is False
