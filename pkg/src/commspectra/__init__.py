"""Spectra, sharp bounds, and extremal search for the double-commutator
operator T_X(Y) = [X*, [X, Y]] on n x n complex matrices.

The operator is Hermitian positive semidefinite for the Frobenius inner
product, with <T_X Y, Y> = ||[X, Y]||^2. The library computes its spectrum
through the Kronecker lift, enforces the proven eigenvalue bounds as hard
invariants, monitors the open partial-sum and weak-majorization conjectures
with re-verifiable violation bundles, evaluates closed forms for normal and
rank-one matrices, certifies the extremal equality case lambda_1 = 2, and
searches for extremal matrices by monotone alternating ascent.
"""

__version__ = "0.1.0"

from .closed_forms import (
    EqualityWitness,
    closed_form_summary,
    detect_equality_case,
    detect_rank_one,
    is_maximal_pair,
    is_normal,
    make_maximal_pair,
    normal_eigenvalues,
    normal_spectrum,
    rank_one_spectrum,
)
from .conjectures import (
    center_normalize,
    check_conj1,
    check_conj2,
    check_conj2c,
    check_isotropic_trace_bound,
    check_lu_lemma,
    check_numbers_lemma,
    cross_check_formulations,
    random_isotropic_family,
    reverify_bundle,
)
from .ensembles import (
    gaussian_matrix,
    haar_unitary,
    random_hermitian,
    random_normal_matrix,
    random_rank_one,
    random_traceless_embedded,
    trial_rng,
    unit_gaussian,
)
from .errors import (
    CommSpectraError,
    ConvergenceError,
    DegenerateInputError,
    DegenerateSupportError,
    InvariantViolationError,
    OrderMismatchError,
    ParseError,
    PreconditionError,
)
from .lifted import (
    LiftedOperators,
    anticommutator_lift,
    build_lifted,
    commutator_lift,
    double_commutator_lift,
    svd_lift_equivalence,
    verify_vec_identity,
)
from .matrices import (
    DEFAULT_ORDER_CAP,
    apply_double_commutator,
    commutator,
    frobenius_inner,
    frobenius_norm,
    herm_skew_split,
    normalized,
    unvec,
    vec,
)
from .matrixio import load_check_payload, load_matrix, save_matrix, sha256_digest
from .search import (
    RestartTrace,
    SearchConfig,
    SearchResult,
    ascend,
    lambda13_search,
    sweep,
    validate_config,
)
from .spectra import (
    LAMBDA13_BOUND,
    BoundReport,
    Spectrum,
    bound_report,
    check_weak_majorization,
    cluster_tolerance,
    double_commutator_spectrum,
    eigen_partner,
    first_four_sum_bound,
    majorization_target,
    monitor_majorization,
    monitor_partial_sums,
    paired_top_family,
    partial_sums,
)
from .verdicts import (
    CONJECTURE_IDS,
    ConjectureVerdict,
    make_bundle,
    read_bundle,
    write_bundle,
)

__all__ = [
    "__version__",
    "CommSpectraError",
    "OrderMismatchError",
    "DegenerateInputError",
    "PreconditionError",
    "ConvergenceError",
    "InvariantViolationError",
    "DegenerateSupportError",
    "ParseError",
    "DEFAULT_ORDER_CAP",
    "apply_double_commutator",
    "commutator",
    "frobenius_inner",
    "frobenius_norm",
    "herm_skew_split",
    "normalized",
    "vec",
    "unvec",
    "LiftedOperators",
    "commutator_lift",
    "anticommutator_lift",
    "double_commutator_lift",
    "build_lifted",
    "verify_vec_identity",
    "svd_lift_equivalence",
    "Spectrum",
    "BoundReport",
    "LAMBDA13_BOUND",
    "cluster_tolerance",
    "double_commutator_spectrum",
    "eigen_partner",
    "paired_top_family",
    "partial_sums",
    "majorization_target",
    "check_weak_majorization",
    "bound_report",
    "first_four_sum_bound",
    "monitor_partial_sums",
    "monitor_majorization",
    "is_normal",
    "normal_eigenvalues",
    "normal_spectrum",
    "detect_rank_one",
    "rank_one_spectrum",
    "EqualityWitness",
    "detect_equality_case",
    "make_maximal_pair",
    "is_maximal_pair",
    "closed_form_summary",
    "center_normalize",
    "check_conj1",
    "check_conj2",
    "check_conj2c",
    "check_lu_lemma",
    "check_numbers_lemma",
    "check_isotropic_trace_bound",
    "random_isotropic_family",
    "cross_check_formulations",
    "reverify_bundle",
    "CONJECTURE_IDS",
    "ConjectureVerdict",
    "make_bundle",
    "read_bundle",
    "write_bundle",
    "RestartTrace",
    "SearchConfig",
    "SearchResult",
    "ascend",
    "lambda13_search",
    "sweep",
    "validate_config",
    "trial_rng",
    "gaussian_matrix",
    "unit_gaussian",
    "haar_unitary",
    "random_hermitian",
    "random_normal_matrix",
    "random_rank_one",
    "random_traceless_embedded",
    "load_matrix",
    "save_matrix",
    "load_check_payload",
    "sha256_digest",
]
