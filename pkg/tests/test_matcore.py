import numpy as np
import pytest

from wstar import (
    ShapeError,
    SubspaceBasis,
    adjoint,
    hs_inner,
    hs_norm,
    max_principal_angle,
    membership_residual,
    orthonormalize,
    product_span,
)
from wstar.randmat import random_hermitian, random_state


def test_hs_inner_conjugate_linear_in_first():
    rng = random_state(1)
    a = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    b = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
    # <za, b> = conj(z) <a, b>
    z = 2 - 3j
    assert abs(hs_inner(z * a, b) - np.conj(z) * hs_inner(a, b)) < 1e-12
    assert abs(hs_inner(a, b) - np.conj(hs_inner(b, a))) < 1e-12
    assert abs(hs_inner(a, a) - hs_norm(a) ** 2) < 1e-12


def test_hs_inner_is_trace_form():
    a = np.array([[1, 2], [3, 4]], dtype=complex)
    b = np.array([[0, 1j], [1, 0]], dtype=complex)
    assert abs(hs_inner(a, b) - np.trace(a.conj().T @ b)) < 1e-14


def test_adjoint():
    a = np.array([[1 + 1j, 2], [0, 3j]])
    assert np.array_equal(adjoint(a), a.conj().T)


def test_rejects_nonsquare():
    with pytest.raises(ShapeError):
        hs_inner(np.ones((2, 3)), np.ones((2, 3)))


def test_orthonormalize_identity_span():
    eye = np.eye(3, dtype=complex)
    basis = orthonormalize([eye, 2 * eye, -1j * eye])
    assert basis.dim == 1
    assert abs(hs_norm(basis.elements[0]) - 1) < 1e-12


def test_orthonormalize_gram_and_membership():
    rng = random_state(2)
    mats = [random_hermitian(rng, 4) for _ in range(6)]
    mats.append(mats[0] + mats[1])  # dependent
    basis = orthonormalize(mats)
    assert basis.dim == 6
    g = basis.gram()
    assert np.max(np.abs(g - np.eye(6))) < 1e-12
    for m in mats:
        assert membership_residual(basis, m) < 1e-10
    outside = np.zeros((4, 4), dtype=complex)
    outside[0, 1] = 1
    res = membership_residual(basis, outside)
    proj = sum(hs_inner(b, outside) * b for b in basis)
    assert abs(res - hs_norm(outside - proj)) < 1e-12


def test_orthonormalize_empty_and_all_zero():
    basis = orthonormalize(np.zeros((3, 2, 2)), ambient_dim=2)
    assert basis.dim == 0
    # residual is relative, so anything nonzero is at unit distance from {0}
    assert membership_residual(basis, np.eye(2)) == pytest.approx(1.0)
    assert membership_residual(basis, np.zeros((2, 2))) == 0.0


def test_product_span_pauli_pair_generates():
    sx = np.array([[0, 1], [1, 0]], dtype=complex)
    sz = np.array([[1, 0], [0, -1]], dtype=complex)
    span = orthonormalize([np.eye(2), sx])
    grown = product_span(span, orthonormalize([np.eye(2), sz]))
    # I, X, Z, XZ span all of 2x2
    assert grown.dim == 4


def test_principal_angle_known():
    # planes spanned by {I, X} vs {I, cos(a) X + sin(a) Z}: angle a
    sx = np.array([[0, 1], [1, 0]], dtype=complex)
    sz = np.array([[1, 0], [0, -1]], dtype=complex)
    ang = 0.3
    u = orthonormalize([np.eye(2), sx])
    v = orthonormalize([np.eye(2), np.cos(ang) * sx + np.sin(ang) * sz])
    assert max_principal_angle(u, v) == pytest.approx(ang, abs=1e-12)
    assert max_principal_angle(u, u) < 1e-8


def test_subspace_basis_iter_and_flat():
    basis = orthonormalize([np.eye(2)])
    assert isinstance(basis, SubspaceBasis)
    mats = list(basis)
    assert len(mats) == 1 and mats[0].shape == (2, 2)
    assert basis.flat.shape == (1, 4)
