import numpy as np
import pytest
from numpy.testing import assert_allclose

from ewcones.linalg import (
    dagger,
    frobenius_inner,
    frobenius_norm,
    hermitian_eig,
    is_hermitian,
    is_psd,
    kron,
    partial_transpose,
)


def random_hermitian(rng, n):
    m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (m + m.conj().T) / 2


def test_dagger_and_inner():
    rng = np.random.default_rng(0)
    a = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    b = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    assert_allclose(dagger(a), a.conj().T)
    assert_allclose(frobenius_inner(a, b), np.trace(a.conj().T @ b), atol=1e-13)
    assert frobenius_norm(a) == pytest.approx(np.linalg.norm(a))


def test_kron_is_numpy():
    assert kron is np.kron


def test_is_hermitian():
    assert is_hermitian(np.array([[1.0, 2j], [-2j, 0.5]]))
    assert not is_hermitian(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_hermitian_eig_matches_lapack():
    rng = np.random.default_rng(1)
    for n in (2, 3, 4, 8, 16):
        for _ in range(5):
            m = random_hermitian(rng, n)
            res = hermitian_eig(m)
            assert_allclose(res.values, np.linalg.eigvalsh(m), atol=1e-10)


def test_hermitian_eig_reconstructs():
    rng = np.random.default_rng(2)
    m = random_hermitian(rng, 6)
    res = hermitian_eig(m)
    v = res.vectors
    assert_allclose(v.conj().T @ v, np.eye(6), atol=1e-11)
    assert_allclose(v @ np.diag(res.values) @ v.conj().T, m, atol=1e-11)


def test_hermitian_eig_sorted_and_real_input():
    # real symmetric input stays on the real path
    rng = np.random.default_rng(3)
    m = rng.standard_normal((5, 5))
    m = m + m.T
    res = hermitian_eig(m)
    assert np.all(np.diff(res.values) >= 0)
    assert_allclose(res.values, np.linalg.eigvalsh(m), atol=1e-11)


def test_hermitian_eig_rejects_non_hermitian():
    with pytest.raises(ValueError):
        hermitian_eig(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_is_psd():
    rng = np.random.default_rng(4)
    a = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    assert is_psd(a @ a.conj().T)
    assert not is_psd(np.diag([1.0, -0.1]))


def test_partial_transpose_on_products():
    # (A x B)^Gamma = A x B^T for the split (3, 4)
    rng = np.random.default_rng(5)
    a = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    b = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    assert_allclose(partial_transpose(np.kron(a, b), 3, 4), np.kron(a, b.T), atol=1e-13)


def test_partial_transpose_involution():
    rng = np.random.default_rng(6)
    m = rng.standard_normal((16, 16)) + 1j * rng.standard_normal((16, 16))
    assert_allclose(partial_transpose(partial_transpose(m, 4, 4), 4, 4), m)


def test_partial_transpose_flags_bell_state():
    bell = np.zeros((4, 4))
    for i in (0, 3):
        for j in (0, 3):
            bell[i, j] = 0.5
    vals = np.linalg.eigvalsh(partial_transpose(bell, 2, 2))
    assert vals[0] == pytest.approx(-0.5, abs=1e-13)
