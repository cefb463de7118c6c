"""Deterministic Hermitian eigendecomposition and singular values.

This is the only module that touches LAPACK; everything downstream consumes
its contracts:

* eigenvalues are returned in descending order;
* eigenvectors are orthonormal, and each column's phase is fixed by making
  its first significantly nonzero component real and positive;
* the max eigenpair residual ``||M v - w v||`` is computed and stored;
* identical input bits give identical output bits (fixed LAPACK build plus
  deterministic post-processing).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, PreconditionError
from .matrices import as_matrix

HERMITICITY_RTOL = 1e-10
# components below this fraction of the column norm do not anchor the phase
PHASE_ANCHOR_RTOL = 1e-6


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues (descending) and phase-fixed orthonormal eigenvectors."""

    values: np.ndarray
    vectors: np.ndarray
    residual: float


@dataclass(frozen=True)
class SingularValues:
    """Singular values in nonincreasing order."""

    values: np.ndarray


def _require_hermitian(M: np.ndarray) -> np.ndarray:
    scale = np.linalg.norm(M)
    dev = np.linalg.norm(M - M.conj().T)
    if dev > HERMITICITY_RTOL * max(scale, 1e-300):
        raise PreconditionError(
            f"matrix is not Hermitian: ||M - M*|| = {dev:.3e} vs ||M|| = {scale:.3e}"
        )
    # symmetrize so LAPACK sees an exactly Hermitian input
    return (M + M.conj().T) / 2


def _fix_phases(V: np.ndarray) -> np.ndarray:
    out = V.copy()
    for j in range(out.shape[1]):
        col = out[:, j]
        mags = np.abs(col)
        anchor = np.argmax(mags >= PHASE_ANCHOR_RTOL * mags.max())
        a = col[anchor]
        if a != 0:
            out[:, j] = col * (a.conjugate() / abs(a))
    return out


def eigh(M) -> EigenDecomposition:
    """Full Hermitian eigendecomposition with the module's determinism contract.

    :raises PreconditionError: if M is not Hermitian to 1e-10 relative
    :raises ConvergenceError: if the LAPACK kernel fails to converge
    """
    H = _require_hermitian(as_matrix(M, "M"))
    try:
        w, V = np.linalg.eigh(H)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise ConvergenceError(f"eigh did not converge: {exc}") from exc
    w = w[::-1].copy()
    V = _fix_phases(V[:, ::-1])
    residual = float(np.linalg.norm(H @ V - V * w, axis=0).max()) if w.size else 0.0
    return EigenDecomposition(values=w, vectors=V, residual=residual)


def eigvalsh(M) -> np.ndarray:
    """Descending eigenvalues only (cheaper than :func:`eigh`)."""
    H = _require_hermitian(as_matrix(M, "M"))
    try:
        w = np.linalg.eigvalsh(H)
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise ConvergenceError(f"eigvalsh did not converge: {exc}") from exc
    return w[::-1].copy()


def svd(X) -> SingularValues:
    """Singular values of a (not necessarily square) complex matrix."""
    A = np.asarray(X, dtype=np.complex128)
    if A.ndim != 2:
        raise PreconditionError(f"expected a 2-D array, got ndim={A.ndim}")
    if not np.isfinite(A).all():
        raise PreconditionError("matrix contains non-finite entries")
    try:
        s = np.linalg.svd(A, compute_uv=False)
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise ConvergenceError(f"svd did not converge: {exc}") from exc
    return SingularValues(values=np.asarray(s, dtype=np.float64))


def svd_full(X) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Full SVD X = U diag(s) Vh with phases fixed on the columns of U.

    The compensating conjugate phase is applied to the rows of Vh so the
    product is unchanged.
    """
    A = as_matrix(X, "X")
    try:
        U, s, Vh = np.linalg.svd(A)
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise ConvergenceError(f"svd did not converge: {exc}") from exc
    U = U.copy()
    Vh = Vh.copy()
    for j in range(U.shape[1]):
        col = U[:, j]
        mags = np.abs(col)
        anchor = np.argmax(mags >= PHASE_ANCHOR_RTOL * mags.max())
        a = col[anchor]
        if a != 0:
            ph = a.conjugate() / abs(a)
            U[:, j] = col * ph
            if j < Vh.shape[0]:
                Vh[j, :] = Vh[j, :] * ph.conjugate()
    return U, s, Vh
