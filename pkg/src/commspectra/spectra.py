"""Spectrum of the double-commutator operator and its bound ladder.

Eigenvalues are always reported for the unit-normalized matrix (the operator
scales as ||X||^2, recorded in ``norm_scale``). The proven bounds, with X
unit Frobenius norm and eigenvalues descending:

* lambda_1 <= 2
* lambda_1 <= 2 (s_1^2 + s_2^2) for the two largest singular values of X
* lambda_1 <= c_x, a sharper constant from the Hermitian/skew eigenvalues
* lambda_i <= 2 lambda_i(G_X) entrywise, G_X the Gram part of the lift
* lambda_1 + lambda_3 <= (4 + sqrt(10)) / 2
* sum of the top 2k eigenvalues <= 2k + 1 + 2 sqrt(k)

Two monitored conjectures sharpen the last two: partial sums <= 2k + 2
(id C2A) and weak majorization by the rank-one profile (id C4).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import eigensolver
from .errors import (
    DegenerateInputError,
    InvariantViolationError,
    OrderMismatchError,
    PreconditionError,
)
from .lifted import double_commutator_lift
from .matrices import (
    DEFAULT_ORDER_CAP,
    as_matrix,
    check_order_cap,
    commutator,
    frobenius_norm,
    herm_skew_split,
    normalized,
    same_order,
    unvec,
    vec,
)
from .verdicts import ConjectureVerdict, make_bundle

CLUSTER_TOL_FLOOR = 1e-7
LAMBDA13_BOUND = (4.0 + np.sqrt(10.0)) / 2.0


def cluster_tolerance(lambda1: float) -> float:
    """Gap below which neighboring eigenvalues belong to one cluster."""
    return max(CLUSTER_TOL_FLOOR, 1e-9 * lambda1)


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues of T_X for the unit-normalized X, descending.

    ``clusters`` holds (representative value, multiplicity) per group under
    :func:`cluster_tolerance`; ``pairing_ok`` records whether every positive
    cluster has even multiplicity; ``norm_scale`` is the ||X||^2 divided out
    (multiply ``values`` by it to recover the spectrum of the raw input).
    """

    values: np.ndarray
    clusters: tuple[tuple[float, int], ...]
    pairing_ok: bool
    norm_scale: float

    @property
    def order(self) -> int:
        return int(round(np.sqrt(self.values.size)))


def _cluster(values: np.ndarray) -> tuple[tuple[float, int], ...]:
    tol = cluster_tolerance(float(values[0])) if values.size else CLUSTER_TOL_FLOOR
    groups: list[tuple[float, int]] = []
    i = 0
    while i < values.size:
        j = i + 1
        while j < values.size and values[j - 1] - values[j] < tol:
            j += 1
        groups.append((float(values[i:j].mean()), j - i))
        i = j
    return tuple(groups)


def double_commutator_spectrum(X, max_order: int = DEFAULT_ORDER_CAP) -> Spectrum:
    """Spectrum of T_X via the Kronecker lift.

    Internally verifies positivity and the trace identity
    sum(lambda) = 2n - 2|Tr Xhat|^2 at 1e-9, raising
    :class:`InvariantViolationError` if the numerics broke them.
    """
    X = as_matrix(X)
    n = X.shape[0]
    check_order_cap(n, max_order)
    nrm = frobenius_norm(X)
    if nrm == 0.0:
        raise DegenerateInputError("the zero matrix has no normalized spectrum")
    Xh = X / nrm
    values = eigensolver.eigvalsh(double_commutator_lift(Xh))
    if values.size and values[-1] < -1e-9:
        raise InvariantViolationError(
            f"lifted operator lost positivity: min eigenvalue {values[-1]:.3e}"
        )
    trace_target = 2.0 * n - 2.0 * abs(np.trace(Xh)) ** 2
    if abs(values.sum() - trace_target) > 1e-9:
        raise InvariantViolationError(
            f"trace identity failed: sum {values.sum()!r} vs {trace_target!r}"
        )
    clusters = _cluster(values)
    tol = cluster_tolerance(float(values[0]))
    pairing_ok = all(mult % 2 == 0 for val, mult in clusters if val > tol)
    return Spectrum(
        values=values, clusters=clusters, pairing_ok=pairing_ok, norm_scale=nrm**2
    )


def eigen_partner(X, Y, value: float) -> np.ndarray:
    """Partner eigenvector [X, Y]* / sqrt(value) of a positive eigenpair.

    The partner shares the eigenvalue, is orthogonal to Y, and applying the
    construction twice returns -Y.

    :raises DegenerateInputError: if value is at noise level
    :raises PreconditionError: if (Y, value) is not an eigenpair of T_X
    """
    X = as_matrix(X, "X")
    Y = as_matrix(Y, "Y")
    same_order(X, Y)
    scale = max(1.0, frobenius_norm(X) ** 2)
    if value <= CLUSTER_TOL_FLOOR * scale:
        raise DegenerateInputError(
            f"eigenvalue {value!r} is at noise level; zero modes have no partner"
        )
    if abs(frobenius_norm(Y) - 1.0) > 1e-6:
        raise PreconditionError("Y must be a unit eigenvector")
    inner = commutator(X, Y)
    Xs = X.conj().T
    resid = np.linalg.norm((Xs @ inner - inner @ Xs) - value * Y)
    if resid > 1e-6 * (1.0 + value):
        raise PreconditionError(
            f"(Y, {value!r}) is not an eigenpair: residual {resid:.3e}"
        )
    return inner.conj().T / np.sqrt(value)


def paired_top_family(X, count: int) -> tuple[list[np.ndarray], np.ndarray]:
    """Orthonormal eigenvector matrices spanning the top ``count`` eigenvalues.

    ``count`` must be even. Within each positive eigenvalue cluster the family
    is built in partner pairs (Y, [X,Y]*/sqrt(lambda)); kernel slots, when
    reached, are filled with unpaired kernel basis matrices. Returns the
    matrices and their eigenvalues.
    """
    X = as_matrix(X)
    n = X.shape[0]
    N = n * n
    if count % 2 != 0 or count < 2:
        raise PreconditionError(f"count must be a positive even number, got {count}")
    if count > N:
        raise PreconditionError(f"count {count} exceeds the lifted order {N}")
    Xh = normalized(X)
    dec = eigensolver.eigh(double_commutator_lift(Xh))
    tol = cluster_tolerance(float(dec.values[0]))

    chosen: list[np.ndarray] = []  # vec coordinates
    chosen_vals: list[float] = []
    i = 0
    while len(chosen) < count and i < N:
        j = i + 1
        while j < N and dec.values[j - 1] - dec.values[j] < tol:
            j += 1
        cluster_vals = dec.values[i:j]
        cluster_vecs = dec.vectors[:, i:j]
        lam = float(cluster_vals.mean())
        if lam <= tol:
            # kernel: plain orthonormal columns, no pairing needed
            for c in range(cluster_vecs.shape[1]):
                if len(chosen) >= count:
                    break
                chosen.append(cluster_vecs[:, c])
                chosen_vals.append(float(cluster_vals[c]))
        else:
            in_cluster: list[np.ndarray] = []
            c = 0
            while len(chosen) < count and c < cluster_vecs.shape[1]:
                y = cluster_vecs[:, c].copy()
                for q in in_cluster:
                    y = y - q * np.vdot(q, y)
                ny = np.linalg.norm(y)
                c += 1
                if ny < 0.5:
                    # this column lives in the span already consumed by partners
                    continue
                y = y / ny
                partner_mat = commutator(Xh, unvec(y, n)).conj().T / np.sqrt(lam)
                p = vec(partner_mat)
                for q in in_cluster + [y]:
                    p = p - q * np.vdot(q, p)
                npn = np.linalg.norm(p)
                if npn < 0.5:  # pragma: no cover - even pairing guarantees room
                    raise InvariantViolationError(
                        "partner collapsed inside its eigenvalue cluster"
                    )
                p = p / npn
                in_cluster.extend([y, p])
                chosen.extend([y, p])
                chosen_vals.extend([lam, lam])
        i = j
    if len(chosen) < count:  # pragma: no cover - count <= N rules this out
        raise InvariantViolationError("could not assemble the requested family")
    mats = [unvec(v, n) for v in chosen[:count]]
    return mats, np.asarray(chosen_vals[:count], dtype=np.float64)


def partial_sums(spectrum: Spectrum) -> np.ndarray:
    """Prefix sums of the spectrum, nondecreasing.

    Rounding noise below zero (bounded by the PSD invariant) is clipped so
    monotonicity holds exactly; the final entry equals the trace identity
    value to 1e-9.
    """
    return np.cumsum(np.maximum(spectrum.values, 0.0))


def majorization_target(n: int) -> np.ndarray:
    """The conjectured dominating profile {2, 2, 1 x (2n-4), 0 x ((n-1)^2+1)}."""
    if n < 2:
        raise PreconditionError(f"the profile needs n >= 2, got {n}")
    return np.array([2.0] * 2 + [1.0] * (2 * n - 4) + [0.0] * ((n - 1) ** 2 + 1))


def check_weak_majorization(
    values, target, tol: float = 1e-8
) -> tuple[bool, int, float]:
    """Check prefix-sum domination of ``values`` by ``target``.

    Both must be descending and equally long. Returns
    (dominated, worst 1-based prefix length, worst excess).
    """
    v = np.asarray(values, dtype=np.float64)
    t = np.asarray(target, dtype=np.float64)
    if v.shape != t.shape or v.ndim != 1:
        raise OrderMismatchError(f"length mismatch: {v.shape} vs {t.shape}")
    slack = 1e-9 * max(1.0, float(np.abs(v).max(initial=0.0)), float(np.abs(t).max(initial=0.0)))
    if np.any(np.diff(v) > slack) or np.any(np.diff(t) > slack):
        raise PreconditionError("inputs must be sorted in descending order")
    excess = np.cumsum(v) - np.cumsum(t)
    worst = int(np.argmax(excess))
    return bool(excess[worst] <= tol), worst + 1, float(excess[worst])


@dataclass(frozen=True)
class BoundReport:
    """The proven bound ladder evaluated on one unit-normalized matrix."""

    lambda1: float
    norm_scale: float
    bounds: dict
    slacks: dict
    all_proven_hold: bool


def bound_report(X, spectrum: Spectrum | None = None) -> BoundReport:
    """Evaluate every proven bound and its slack for X / ||X||.

    ``spectrum`` may be passed to reuse a precomputed
    :func:`double_commutator_spectrum` of the same X.
    """
    X = as_matrix(X)
    n = X.shape[0]
    if n < 2:
        raise PreconditionError("the bound ladder needs n >= 2")
    spec = double_commutator_spectrum(X) if spectrum is None else spectrum
    lam = spec.values
    N = lam.size
    Xh = normalized(X)
    s = eigensolver.svd(Xh).values
    A, B = herm_skew_split(Xh)
    a = eigensolver.eigvalsh(A)
    b = eigensolver.eigvalsh(B / 1j)
    norm22 = 2.0 * float(s[0] ** 2 + s[1] ** 2)
    cx = (
        2.0 * (float((-np.outer(a, a)).max()) + float((-np.outer(b, b)).max()))
        + float(s[0] ** 2 + s[1] ** 2)
    )
    k1 = 2.0 * np.sort(np.add.outer(s**2, s**2).ravel())[::-1]
    ks = np.arange(1, N // 2 + 1)
    partial_weak = 2.0 * ks + 1.0 + 2.0 * np.sqrt(ks)
    prefix = partial_sums(spec)
    lam1 = float(lam[0])
    bounds = {
        "bw": 2.0,
        "norm22": norm22,
        "cx": cx,
        "min_bound": min(2.0, norm22, cx),
        "k1_entrywise": k1,
        "lambda13_weak": float(LAMBDA13_BOUND),
        "partial_sum_weak": partial_weak,
    }
    slacks = {
        "bw": 2.0 - lam1,
        "norm22": norm22 - lam1,
        "cx": cx - lam1,
        "min_bound": bounds["min_bound"] - lam1,
        "k1_entrywise": float((k1 - lam).min()),
        "lambda13_weak": float(LAMBDA13_BOUND - (lam[0] + lam[2])),
        "partial_sum_weak": float((partial_weak - prefix[2 * ks - 1]).min()),
    }
    return BoundReport(
        lambda1=lam1,
        norm_scale=spec.norm_scale,
        bounds=bounds,
        slacks=slacks,
        all_proven_hold=bool(min(slacks.values()) >= -1e-8),
    )


def first_four_sum_bound(X) -> float:
    """Certificate upper bound for lambda_1 + ... + lambda_4 of T_X.

    Computed on X as given (the value scales as ||X||^2):
    4 (s_1^2 + s_2^2) plus a correction from the three largest eigenvalues
    of the Kronecker squares of the Hermitian and skew parts.
    """
    X = as_matrix(X)
    if X.shape[0] < 2:
        raise PreconditionError("the certificate needs n >= 2")
    s = eigensolver.svd(X).values
    A, B = herm_skew_split(X)
    a = eigensolver.eigvalsh(A)
    b = eigensolver.eigvalsh(B / 1j)
    mu_a = np.sort((-np.outer(a, a)).ravel())[::-1]
    mu_b = np.sort((-np.outer(b, b)).ravel())[::-1]
    phi = (4.0 * mu_a[0] + 2.0 * mu_a[1:3].sum()) + (
        4.0 * mu_b[0] + 2.0 * mu_b[1:3].sum()
    )
    return float(4.0 * (s[0] ** 2 + s[1] ** 2) + phi)


def monitor_partial_sums(
    X, spectrum: Spectrum | None = None, tol: float = 1e-8, seed: int | None = None
) -> ConjectureVerdict:
    """Monitor the open bound sum(top 2k) <= 2k + 2 for every k (id C2A)."""
    X = as_matrix(X)
    spec = double_commutator_spectrum(X) if spectrum is None else spectrum
    prefix = partial_sums(spec)
    N = spec.values.size
    ks = np.arange(1, N // 2 + 1)
    lhs_all = prefix[2 * ks - 1]
    rhs_all = 2.0 * ks + 2.0
    worst = int(np.argmax(lhs_all - rhs_all))
    lhs = float(lhs_all[worst])
    rhs = float(rhs_all[worst])
    satisfied = lhs <= rhs + tol
    witness = None
    if not satisfied:
        witness = make_bundle("C2A", [normalized(X)], lhs, rhs, 0.0, seed)
    return ConjectureVerdict("C2A", 0.0, lhs, rhs, satisfied, witness)


def monitor_majorization(
    X, spectrum: Spectrum | None = None, tol: float = 1e-8, seed: int | None = None
) -> ConjectureVerdict:
    """Monitor weak majorization by the rank-one profile (id C4)."""
    X = as_matrix(X)
    spec = double_commutator_spectrum(X) if spectrum is None else spectrum
    target = majorization_target(spec.order)
    ok, worst_k, _ = check_weak_majorization(spec.values, target, tol=tol)
    lhs = float(np.cumsum(spec.values)[worst_k - 1])
    rhs = float(np.cumsum(target)[worst_k - 1])
    witness = None
    if not ok:
        witness = make_bundle("C4", [normalized(X)], lhs, rhs, 0.0, seed)
    return ConjectureVerdict("C4", 0.0, lhs, rhs, ok, witness)
