"""Deterministic eigensolver contracts and classical spectral inequalities."""
import numpy as np
import pytest

from commspectra import ConvergenceError, PreconditionError, trial_rng
from commspectra.eigensolver import eigh, eigvalsh, svd, svd_full


def _random_hermitian(rng, n):
    G = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (G + G.conj().T) / 2


def test_known_two_by_two_spectrum():
    M = np.array([[2, 1j], [-1j, 2]], dtype=complex)
    dec = eigh(M)
    np.testing.assert_allclose(dec.values, [3.0, 1.0], atol=1e-12)


def test_eigh_contract_descending_orthonormal_small_residual():
    for t in range(20):
        rng = trial_rng(10, t)
        n = 2 + t % 6
        H = _random_hermitian(rng, n)
        dec = eigh(H)
        assert np.all(np.diff(dec.values) <= 1e-12)
        gram = dec.vectors.conj().T @ dec.vectors
        assert np.linalg.norm(gram - np.eye(n)) < 1e-12
        assert dec.residual < 1e-12 * max(1.0, np.linalg.norm(H))
        np.testing.assert_allclose(eigvalsh(H), dec.values, atol=1e-12)


def test_eigh_phase_fixing_makes_anchor_real_positive():
    rng = trial_rng(11, 0)
    H = _random_hermitian(rng, 5)
    V = eigh(H).vectors
    for j in range(5):
        col = V[:, j]
        mags = np.abs(col)
        anchor = np.argmax(mags >= 1e-6 * mags.max())
        a = col[anchor]
        assert abs(a.imag) < 1e-12 and a.real > 0


def test_eigh_determinism_bit_for_bit():
    rng = trial_rng(12, 0)
    H = _random_hermitian(rng, 7)
    d1, d2 = eigh(H.copy()), eigh(H.copy())
    assert d1.values.tobytes() == d2.values.tobytes()
    assert d1.vectors.tobytes() == d2.vectors.tobytes()


def test_eigh_rejects_non_hermitian():
    with pytest.raises(PreconditionError):
        eigh(np.array([[0, 1], [0, 0]], dtype=complex))
    with pytest.raises(PreconditionError):
        eigvalsh(np.array([[0, 1e-5], [0, 0]], dtype=complex))


def test_svd_values_and_reconstruction():
    rng = trial_rng(13, 0)
    X = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    s = svd(X).values
    assert np.all(np.diff(s) <= 0) and np.all(s >= 0)
    # singular values squared are the eigenvalues of X* X
    np.testing.assert_allclose(s**2, eigvalsh(X.conj().T @ X), atol=1e-10)
    U, s2, Vh = svd_full(X)
    np.testing.assert_allclose(U @ np.diag(s2) @ Vh, X, atol=1e-12)
    np.testing.assert_allclose(s2, s, atol=1e-12)
    assert np.linalg.norm(U.conj().T @ U - np.eye(4)) < 1e-12


def test_svd_rejects_non_finite():
    with pytest.raises(PreconditionError):
        svd(np.array([[np.inf, 0], [0, 0]]))


def test_top_k_eigenvalue_sum_subadditivity():
    # sum of top-k eigenvalues is subadditive over Hermitian sums
    for t in range(20):
        rng = trial_rng(14, t)
        n = 3 + t % 4
        A, B = _random_hermitian(rng, n), _random_hermitian(rng, n)
        wa, wb, wab = eigvalsh(A), eigvalsh(B), eigvalsh(A + B)
        for k in range(1, n + 1):
            assert wab[:k].sum() <= wa[:k].sum() + wb[:k].sum() + 1e-9


def test_hermitian_part_eigenvalues_below_singular_values():
    # lambda_i of the Hermitian part never exceeds sigma_i of the matrix
    for t in range(50):
        rng = trial_rng(15, t)
        n = 2 + t % 5
        M = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        lam = eigvalsh((M + M.conj().T) / 2)
        sig = svd(M).values
        assert np.all(lam <= sig + 1e-9)


def test_kronecker_product_eigenvalues_are_products():
    rng = trial_rng(16, 0)
    A, B = _random_hermitian(rng, 3), _random_hermitian(rng, 4)
    prod = np.sort(np.outer(eigvalsh(A), eigvalsh(B)).ravel())[::-1]
    direct = eigvalsh(np.kron(A, B))
    np.testing.assert_allclose(direct, prod, atol=1e-10)


def test_convergence_error_type_is_runtime():
    assert issubclass(ConvergenceError, RuntimeError)
