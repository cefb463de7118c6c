"""Core matrix operations: commutators, the double-commutator operator,
Frobenius geometry, and the column-major vec/unvec maps.

All matrices are square complex128 numpy arrays. ``vec`` stacks columns
(Fortran order), the convention under which vec(A Y B) = (B^T kron A) vec(Y).
"""
from __future__ import annotations

import numpy as np

from .errors import DegenerateInputError, OrderMismatchError, PreconditionError

# Expensive lifted-space routines refuse orders above this unless the caller
# raises the cap explicitly; the lifted matrices have n^4 entries.
DEFAULT_ORDER_CAP = 16


def as_matrix(X, name: str = "X") -> np.ndarray:
    """Validate and return a square complex128 matrix.

    :param X: array-like, square
    :param name: label used in error messages
    :raises OrderMismatchError: if not square 2-D
    :raises PreconditionError: if entries are not finite
    """
    M = np.asarray(X, dtype=np.complex128)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise OrderMismatchError(f"{name} must be square, got shape {M.shape}")
    if not np.isfinite(M).all():
        raise PreconditionError(f"{name} contains non-finite entries")
    return M


def same_order(X: np.ndarray, Y: np.ndarray) -> int:
    if X.shape != Y.shape:
        raise OrderMismatchError(f"order mismatch: {X.shape} vs {Y.shape}")
    return X.shape[0]


def check_order_cap(n: int, max_order: int = DEFAULT_ORDER_CAP) -> None:
    if n > max_order:
        raise PreconditionError(
            f"order {n} exceeds the cap {max_order}; pass max_order explicitly to override"
        )


def frobenius_inner(A, B) -> complex:
    """Frobenius inner product <A, B> = Tr(A B*).

    Linear in A, conjugate-linear in B.
    """
    A = np.asarray(A, dtype=np.complex128)
    B = np.asarray(B, dtype=np.complex128)
    if A.shape != B.shape:
        raise OrderMismatchError(f"order mismatch: {A.shape} vs {B.shape}")
    return complex(np.vdot(B, A))


def frobenius_norm(X) -> float:
    return float(np.linalg.norm(np.asarray(X)))


def normalized(X) -> np.ndarray:
    """Return X / ||X||_F; a zero matrix is a degenerate input."""
    X = as_matrix(X)
    nrm = frobenius_norm(X)
    if nrm == 0.0:
        raise DegenerateInputError("cannot normalize the zero matrix")
    return X / nrm


def commutator(X, Y) -> np.ndarray:
    """[X, Y] = XY - YX."""
    X = as_matrix(X, "X")
    Y = as_matrix(Y, "Y")
    same_order(X, Y)
    return X @ Y - Y @ X


def apply_double_commutator(X, Y) -> np.ndarray:
    """Apply T_X: Y -> [X*, [X, Y]].

    T_X is linear, self-adjoint and positive semidefinite for the Frobenius
    inner product: <T_X Y, Y> = ||[X, Y]||_F^2.
    """
    X = as_matrix(X, "X")
    Y = as_matrix(Y, "Y")
    same_order(X, Y)
    inner = X @ Y - Y @ X
    Xs = X.conj().T
    return Xs @ inner - inner @ Xs


def herm_skew_split(X) -> tuple[np.ndarray, np.ndarray]:
    """Split X = A + B into Hermitian A and skew-Hermitian B.

    The split is orthogonal: ||X||^2 = ||A||^2 + ||B||^2.
    """
    X = as_matrix(X)
    Xs = X.conj().T
    return (X + Xs) / 2, (X - Xs) / 2


def vec(X) -> np.ndarray:
    """Column-major vectorization: columns of X stacked top to bottom."""
    return np.asarray(X, dtype=np.complex128).ravel(order="F")


def unvec(v, n: int) -> np.ndarray:
    """Inverse of :func:`vec` for an order-n matrix."""
    v = np.asarray(v, dtype=np.complex128).ravel()
    if v.size != n * n:
        raise OrderMismatchError(f"vector length {v.size} is not {n}^2")
    return v.reshape((n, n), order="F")


def kron(A, B) -> np.ndarray:
    """Kronecker product; satisfies vec(A Y B) = (B^T kron A) vec(Y)."""
    return np.kron(np.asarray(A, dtype=np.complex128), np.asarray(B, dtype=np.complex128))
