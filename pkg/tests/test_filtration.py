import json
import math

import numpy as np
import pytest

from wstar import (
    FiniteMetric,
    build_irrep,
    classical_filtration,
    hamming_filtration,
    max_principal_angle,
    membership_residual,
    metric_from_filtration,
    orthonormalize,
    path_metric,
    pure_terms,
    random_metric,
    su2_filtration,
    tensor_op_basis,
    verify_axioms,
)
from wstar.randmat import random_state


# ------------------------------------------------------------------ su2

@pytest.mark.parametrize("two_j", [1, 2, 3, 5])
def test_su2_dimensions(two_j):
    filt = su2_filtration(build_irrep(two_j))
    n = two_j + 1
    for t, basis in filt.grades:
        assert basis.dim == min((t + 1) ** 2, n * n)
    assert filt.labels() == list(range(two_j + 1))
    assert filt.top().dim == n * n


def test_su2_axioms_and_grade_le():
    filt = su2_filtration(build_irrep(4))
    report = verify_axioms(filt)
    assert report.passed and report.max_residual < 1e-9
    assert filt.grade_le(2.5).dim == 9
    assert filt.grade_le(100).dim == 25
    with pytest.raises(KeyError):
        filt.basis_at(2.5)


def test_su2_max_grade_cap():
    filt = su2_filtration(build_irrep(6), max_grade=2)
    assert filt.labels() == [0, 1, 2]


def test_su2_product_axiom_fails_when_grade_mislabeled():
    # E_1 relabeled as grade 0 breaks E_0 . E_0 <= E_0
    from wstar.filtration import Filtration

    filt = su2_filtration(build_irrep(2))
    grades = list(filt.grades)
    bad = Filtration(filt.ambient_dim, ((0, grades[1][1]), (1, grades[1][1]), (2, grades[2][1])), "su2")
    assert not verify_axioms(bad).passed


# -------------------------------------------------------------- hamming

def test_hamming_dimensions():
    for n in (1, 2, 3):
        filt = hamming_filtration(n)
        dims = [b.dim for _, b in filt.grades]
        want = []
        total = 0
        for w in range(n + 1):
            total += math.comb(n, w) * 3**w
            want.append(total)
        assert dims == want
        assert verify_axioms(filt).passed


def test_hamming_rejects_large_n():
    with pytest.raises(ValueError):
        hamming_filtration(4)


# ------------------------------------------------------------ classical

def test_finite_metric_validate():
    m = path_metric(4)
    m.validate()
    bad = FiniteMetric(("a", "b"), np.array([[0.0, 1.0], [2.0, 0.0]]))
    with pytest.raises(ValueError):
        bad.validate()  # not symmetric
    tri = FiniteMetric((0, 1, 2), np.array([[0, 1, 5], [1, 0, 1], [5, 1, 0]], dtype=float))
    with pytest.raises(ValueError):
        tri.validate()  # 5 > 1 + 1


def test_metric_json_roundtrip():
    m = random_metric(5, random_state(3))
    back = FiniteMetric.from_json(json.dumps(m.to_dict()))
    assert list(back.labels) == list(m.labels)
    assert np.array_equal(back.dist, m.dist)


def test_classical_filtration_grades_are_indicator_spans():
    m = path_metric(3)  # distances 0,1,2
    filt = classical_filtration(m)
    assert filt.labels() == [0.0, 1.0, 2.0]
    assert [b.dim for _, b in filt.grades] == [3, 7, 9]
    # grade 1 holds exactly the units at distance <= 1
    basis = filt.basis_at(1.0)
    u = np.zeros((3, 3), dtype=complex)
    u[0, 1] = 1
    assert membership_residual(basis, u) < 1e-12
    far = np.zeros((3, 3), dtype=complex)
    far[0, 2] = 1
    assert membership_residual(basis, far) > 0.9


def test_metric_roundtrip_exact_small():
    for seed in range(20):
        n = 2 + seed % 7
        m = random_metric(n, random_state(100 + seed))
        back = metric_from_filtration(classical_filtration(m))
        assert np.array_equal(back.dist, m.dist)
        assert list(back.labels) == list(m.labels)


def test_classical_axioms():
    m = random_metric(6, random_state(9))
    assert verify_axioms(classical_filtration(m)).passed


# ----------------------------------------------------------- pure terms

@pytest.mark.parametrize("two_j", [1, 3, 5])
def test_su2_pure_terms_match_tensor_ops(two_j):
    rep = build_irrep(two_j)
    filt = su2_filtration(rep)
    terms = dict(pure_terms(filt))
    for d in range(two_j + 1):
        span = orthonormalize(tensor_op_basis(rep, d).ops)
        assert terms[d].dim == 2 * d + 1
        assert max_principal_angle(terms[d], span) < 1e-8


def test_pure_terms_sum_dims():
    m = random_metric(5, random_state(4))
    filt = classical_filtration(m)
    assert sum(b.dim for _, b in pure_terms(filt)) == filt.top().dim
