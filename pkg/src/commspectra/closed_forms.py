"""Closed-form spectra for special classes and the extremal-equality witness.

For unit Frobenius norm X:

* normal X with eigenvalues x_i: the lifted spectrum is {|x_i - x_j|^2};
* rank-one X with t = |Tr X|^2: the spectrum is
  {2 - t, 2 - t} + {1 x (2n - 4)} + {0 x ((n-1)^2 + 1)};
* lambda_1 = 2 exactly when X = U diag(X0, 0) U* with Tr X0 = 0, and the
  witness (U, X0) is recoverable from the two-dimensional joint support of
  X and X*.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import eigensolver
from .errors import DegenerateInputError, DegenerateSupportError, PreconditionError
from .matrices import (
    as_matrix,
    commutator,
    frobenius_norm,
    herm_skew_split,
    normalized,
    same_order,
)
from .spectra import Spectrum, double_commutator_spectrum

NORMALITY_RTOL = 1e-10
RANK_ONE_RTOL = 1e-8
EQUALITY_THRESHOLD = 2.0 - 1e-6
WITNESS_RESIDUAL_TOL = 1e-7


def is_normal(X, rtol: float = NORMALITY_RTOL) -> bool:
    """True when [X, X*] vanishes to ``rtol`` relative to ||X||^2."""
    X = as_matrix(X)
    scale = max(frobenius_norm(X) ** 2, 1e-300)
    return float(np.linalg.norm(commutator(X, X.conj().T))) <= rtol * scale


def normal_eigenvalues(X) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues and a joint unitary eigenbasis of a normal matrix.

    Diagonalizes the Hermitian part, then re-diagonalizes the skew part
    inside each eigenvalue cluster; for normal X the two commute, so this
    is an exact joint diagonalization. Returns (x, U) with X U = U diag(x).

    :raises PreconditionError: if X is not normal (checked up front and
        again through the final eigenpair residual)
    """
    X = as_matrix(X)
    if not is_normal(X, rtol=1e-8):
        raise PreconditionError("matrix is not normal")
    n = X.shape[0]
    A, B = herm_skew_split(X)
    Bh = B / 1j
    alpha_dec = eigensolver.eigh(A)
    # work in ascending order so clustering is a single pass
    alpha = alpha_dec.values[::-1].copy()
    U = alpha_dec.vectors[:, ::-1].copy()
    scale = max(1.0, float(np.abs(alpha).max(initial=0.0)))
    x = np.empty(n, dtype=np.complex128)
    i = 0
    while i < n:
        j = i + 1
        while j < n and alpha[j] - alpha[j - 1] < 1e-8 * scale:
            j += 1
        Uc = U[:, i:j]
        sub = eigensolver.eigh(Uc.conj().T @ Bh @ Uc)
        U[:, i:j] = Uc @ sub.vectors
        x[i:j] = alpha[i:j] + 1j * sub.values
        i = j
    resid = float(np.linalg.norm(X @ U - U * x))
    if resid > 1e-8 * max(1.0, frobenius_norm(X)):
        raise PreconditionError(
            f"joint diagonalization residual {resid:.3e}; matrix is not normal enough"
        )
    return x, U


def normal_spectrum(X) -> np.ndarray:
    """Closed-form lifted spectrum {|x_i - x_j|^2} of a normal X, descending.

    Values refer to the unit-normalized matrix, matching
    :func:`commspectra.spectra.double_commutator_spectrum`.
    """
    Xh = normalized(X)
    x, _ = normal_eigenvalues(Xh)
    diffs = np.abs(np.subtract.outer(x, x)) ** 2
    return np.sort(diffs.ravel())[::-1]


def detect_rank_one(X) -> tuple[bool, float]:
    """(is rank one, |Tr Xhat|^2) using the s_2/s_1 < 1e-8 cutoff."""
    Xh = normalized(X)
    s = eigensolver.svd(Xh).values
    is_r1 = bool(s.size == 1 or s[1] <= RANK_ONE_RTOL * s[0])
    return is_r1, float(abs(np.trace(Xh)) ** 2)


def rank_one_spectrum(n: int, trace_abs_sq: float) -> np.ndarray:
    """Closed-form lifted spectrum of a unit-norm rank-one matrix, descending.

    ``trace_abs_sq`` is |Tr X|^2 of the unit-normalized matrix, in [0, 1].
    """
    if n < 2:
        raise PreconditionError(f"rank-one closed form needs n >= 2, got {n}")
    t = float(trace_abs_sq)
    if not -1e-12 <= t <= 1.0 + 1e-12:
        raise PreconditionError(f"|Tr X|^2 = {t!r} outside [0, 1] for unit norm")
    t = min(max(t, 0.0), 1.0)
    values = [2.0 - t] * 2 + [1.0] * (2 * n - 4) + [0.0] * ((n - 1) ** 2 + 1)
    return np.asarray(values, dtype=np.float64)


@dataclass(frozen=True)
class EqualityWitness:
    """Certificate that lambda_1(T_X) attains the extremal value 2.

    ``unitary`` and ``block`` reconstruct the unit-normalized input as
    U diag(X0, 0) U*; ``embedding_residual`` is the Frobenius error of that
    reconstruction and ``trace_abs`` is |Tr X0| (zero in exact arithmetic).
    """

    unitary: np.ndarray
    block: np.ndarray
    lambda1: float
    embedding_residual: float
    trace_abs: float


def _pivoted_orthonormal_basis(cols: np.ndarray, tol: float) -> list[np.ndarray]:
    # modified Gram-Schmidt, pivot on the largest remaining norm, ties by index
    R = cols.astype(np.complex128).copy()
    basis: list[np.ndarray] = []
    while True:
        norms = np.linalg.norm(R, axis=0)
        j = int(np.argmax(norms))
        if norms[j] <= tol:
            break
        q = R[:, j] / norms[j]
        basis.append(q)
        R = R - np.outer(q, q.conj() @ R)
    return basis


def _complete_unitary(basis: list[np.ndarray], n: int) -> np.ndarray:
    cols = list(basis)
    for i in range(n):
        e = np.zeros(n, dtype=np.complex128)
        e[i] = 1.0
        for q in cols:
            e = e - q * np.vdot(q, e)
        nrm = np.linalg.norm(e)
        if nrm > 1e-8:
            cols.append(e / nrm)
        if len(cols) == n:
            break
    if len(cols) != n:  # pragma: no cover - canonical basis always completes
        raise DegenerateSupportError("failed to complete the witness unitary")
    return np.column_stack(cols)


def detect_equality_case(
    X, spectrum: Spectrum | None = None, threshold: float = EQUALITY_THRESHOLD
) -> EqualityWitness | None:
    """Witness for lambda_1 = 2, or None when lambda_1 is below ``threshold``.

    :raises DegenerateSupportError: if lambda_1 passes the threshold but no
        valid two-dimensional embedding exists at the residual tolerance
    """
    X = as_matrix(X)
    n = X.shape[0]
    spec = double_commutator_spectrum(X) if spectrum is None else spectrum
    lambda1 = float(spec.values[0])
    if lambda1 <= threshold:
        return None
    Xh = normalized(X)
    basis = _pivoted_orthonormal_basis(np.hstack([Xh, Xh.conj().T]), tol=1e-8)
    if len(basis) != 2:
        raise DegenerateSupportError(
            f"joint support has dimension {len(basis)}, expected 2 "
            f"(lambda_1 = {lambda1!r})"
        )
    U = _complete_unitary(basis, n)
    Q = U[:, :2]
    X0 = Q.conj().T @ Xh @ Q
    residual = float(np.linalg.norm(Xh - Q @ X0 @ Q.conj().T))
    if residual > WITNESS_RESIDUAL_TOL:
        raise DegenerateSupportError(
            f"embedding residual {residual:.3e} exceeds {WITNESS_RESIDUAL_TOL:g} "
            f"(lambda_1 = {lambda1!r})"
        )
    return EqualityWitness(
        unitary=U,
        block=X0,
        lambda1=lambda1,
        embedding_residual=residual,
        trace_abs=float(abs(np.trace(X0))),
    )


def make_maximal_pair(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Canonical unit pair attaining ||[X, Y]||^2 = 2 ||X||^2 ||Y||^2.

    The top-left 2x2 blocks are (E12 - E21)/sqrt(2) and (E11 - E22)/sqrt(2).
    """
    if n < 2:
        raise PreconditionError(f"a maximal pair needs n >= 2, got {n}")
    X = np.zeros((n, n), dtype=np.complex128)
    Y = np.zeros((n, n), dtype=np.complex128)
    r = 1.0 / np.sqrt(2.0)
    X[0, 1], X[1, 0] = r, -r
    Y[0, 0], Y[1, 1] = r, -r
    return X, Y


def is_maximal_pair(X, Y, tol: float = 1e-8) -> tuple[bool, float]:
    """Whether the pair attains the commutator-norm maximum.

    Returns (attained, ratio) with ratio = ||[X,Y]||^2 / (2 ||X||^2 ||Y||^2),
    which never exceeds 1 beyond rounding.
    """
    X = as_matrix(X, "X")
    Y = as_matrix(Y, "Y")
    same_order(X, Y)
    nx, ny = frobenius_norm(X), frobenius_norm(Y)
    if nx == 0.0 or ny == 0.0:
        raise DegenerateInputError("maximal-pair check needs nonzero matrices")
    ratio = float(np.linalg.norm(commutator(X, Y)) ** 2 / (2.0 * nx**2 * ny**2))
    return bool(ratio >= 1.0 - tol), ratio


def closed_form_summary(X) -> dict:
    """Classify X and compare every applicable closed form with the dense
    spectrum; used by the command-line ``closed-form`` report."""
    X = as_matrix(X)
    spec = double_commutator_spectrum(X)
    normal_flag = is_normal(X)
    r1_flag, t = detect_rank_one(X)
    out: dict = {
        "order": X.shape[0],
        "is_normal": normal_flag,
        "is_rank_one": r1_flag,
        "classification": "rank_one" if r1_flag else ("normal" if normal_flag else "none"),
        "dense_values": spec.values,
        "norm_scale": spec.norm_scale,
    }
    if normal_flag:
        cf = normal_spectrum(X)
        out["normal_closed_form"] = {
            "values": cf,
            "max_abs_diff": float(np.abs(cf - spec.values).max()),
        }
    if r1_flag:
        cf = rank_one_spectrum(X.shape[0], t)
        out["rank_one_closed_form"] = {
            "trace_abs_sq": t,
            "values": cf,
            "max_abs_diff": float(np.abs(cf - spec.values).max()),
        }
    witness = None
    try:
        witness = detect_equality_case(X, spectrum=spec)
    except DegenerateSupportError as exc:
        out["equality"] = {"detected": True, "witness_valid": False, "detail": str(exc)}
    else:
        if witness is None:
            out["equality"] = {"detected": False}
        else:
            out["equality"] = {
                "detected": True,
                "witness_valid": True,
                "lambda1": witness.lambda1,
                "embedding_residual": witness.embedding_residual,
                "trace_abs": witness.trace_abs,
            }
    return out
