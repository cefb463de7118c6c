"""Alternating-ascent extremal search and the monitor sweep."""
import numpy as np
import pytest

from commspectra import (
    LAMBDA13_BOUND,
    PreconditionError,
    SearchConfig,
    ascend,
    double_commutator_spectrum,
    lambda13_search,
    make_maximal_pair,
    reverify_bundle,
    sweep,
    validate_config,
)


def test_ascend_reaches_global_maximum_for_smallest_order():
    result = ascend(SearchConfig(order=2, k=1, restarts=8, seed=0))
    assert result.objective == "partial_sum"
    assert result.best_objective == pytest.approx(4.0, abs=1e-6)
    assert result.conjectured_bound == 4.0
    assert result.proven_bound == 4.0  # min(2k+1+2sqrt(k), 2n) with n = 2
    assert abs(result.gap_to_conjecture) < 1e-6
    assert result.monotone_ok
    assert result.violation is None
    assert len(result.restarts) == 8
    # the reported matrix actually attains the reported objective
    spec = double_commutator_spectrum(result.best_matrix)
    assert spec.values[:2].sum() == pytest.approx(result.best_objective, abs=1e-9)


@pytest.mark.parametrize("init", ["random_gaussian", "normal_class", "rank_one"])
def test_ascend_converges_from_every_init_class(init):
    result = ascend(SearchConfig(order=2, k=1, restarts=4, seed=2, init=init))
    assert result.best_objective == pytest.approx(4.0, abs=1e-6)


def test_ascend_is_deterministic():
    config = SearchConfig(order=3, k=1, restarts=3, seed=7, max_iters=60)
    a = ascend(config)
    b = ascend(config)
    assert a.best_objective == b.best_objective
    assert a.best_matrix.tobytes() == b.best_matrix.tobytes()
    assert a.restarts == b.restarts


def test_ascend_user_matrix_restart_zero_is_unperturbed():
    X, _ = make_maximal_pair(2)
    result = ascend(
        SearchConfig(order=2, k=1, restarts=3, seed=0, init="user_matrix", matrix=X)
    )
    # the supplied matrix is already the maximizer, so restart 0 starts at 4
    assert result.restarts[0].first_objective == pytest.approx(4.0, abs=1e-9)
    assert result.best_objective == pytest.approx(4.0, abs=1e-9)
    assert [t.index for t in result.restarts] == [0, 1, 2]


def test_validate_config_rejections():
    good = dict(order=2, k=1)
    with pytest.raises(PreconditionError):
        validate_config(SearchConfig(order=1, k=1))
    with pytest.raises(PreconditionError):
        validate_config(SearchConfig(order=40, k=1))  # above the order cap
    with pytest.raises(PreconditionError):
        validate_config(SearchConfig(order=2, k=0))
    with pytest.raises(PreconditionError):
        validate_config(SearchConfig(order=2, k=3))  # k > n^2 / 2
    with pytest.raises(PreconditionError):
        validate_config(SearchConfig(**good, restarts=0))
    with pytest.raises(PreconditionError):
        validate_config(SearchConfig(**good, max_iters=0))
    with pytest.raises(PreconditionError):
        validate_config(SearchConfig(**good, flat_iters=0))
    with pytest.raises(PreconditionError):
        validate_config(SearchConfig(**good, init="simulated_annealing"))
    with pytest.raises(PreconditionError):
        validate_config(SearchConfig(**good, init="user_matrix"))
    with pytest.raises(PreconditionError):
        validate_config(
            SearchConfig(order=2, k=1, init="user_matrix", matrix=np.eye(3))
        )
    with pytest.raises(PreconditionError):
        validate_config(SearchConfig(**good, matrix=np.eye(2)))


def test_lambda13_search_smallest_order_reduces_to_trace():
    # for n = 2 the k = 2 sum is the whole trace, maximal value 4, half 2
    result = lambda13_search(2, restarts=6, seed=1, max_iters=50)
    assert result.objective == "lambda13"
    assert result.best_objective == pytest.approx(2.0, abs=1e-6)
    assert result.conjectured_bound == 3.0
    assert result.proven_bound == pytest.approx(LAMBDA13_BOUND)
    assert result.violation is None
    assert result.restarts[0].last_objective == pytest.approx(
        result.restarts[0].last_objective
    )
    with pytest.raises(PreconditionError):
        lambda13_search(1)


def test_lambda13_search_stays_under_proven_cap():
    result = lambda13_search(3, restarts=10, seed=4, max_iters=80)
    assert result.best_objective <= LAMBDA13_BOUND + 1e-8
    assert result.best_objective <= 3.0 + 1e-6  # no conjecture breach observed


def test_sweep_row_structure_and_clean_run():
    report = sweep([2], k_rule="all", trials=6, seed=3)
    assert report["seed"] == 3
    assert report["trials_per_order"] == 6
    assert report["majorization_violations"] == []
    assert [row["k"] for row in report["rows"]] == [1, 2]
    for row in report["rows"]:
        assert row["n"] == 2 and row["trials"] == 6
        assert row["violations"] == []
        assert row["max_f"] <= row["bound_conjectured"] + 1e-8
        assert row["bound_proven"] <= 2.0 * row["n"] + 1e-12
        assert set(row["argmax_matrix"]) == {"re", "im"}


def test_sweep_k_rule_variants():
    assert [r["k"] for r in sweep([3], k_rule=2, trials=2, seed=0)["rows"]] == [2]
    report = sweep([2, 3], k_rule=lambda n: [1], trials=2, seed=0)
    assert [(r["n"], r["k"]) for r in report["rows"]] == [(2, 1), (3, 1)]
    with pytest.raises(PreconditionError):
        sweep([2], k_rule=5, trials=1)
    with pytest.raises(PreconditionError):
        sweep([1], trials=1)


def test_sweep_is_deterministic():
    a = sweep([2], k_rule=1, trials=5, seed=11)
    b = sweep([2], k_rule=1, trials=5, seed=11)
    assert a == b


def test_sweep_forced_violations_carry_reverifiable_bundles():
    report = sweep([2], k_rule=1, trials=2, seed=9, tol=-100.0)
    row = report["rows"][0]
    assert len(row["violations"]) == 2
    assert len(report["majorization_violations"]) == 2
    for bundle in row["violations"]:
        assert bundle["conjecture_id"] == "C2A"
        assert reverify_bundle(bundle).satisfied  # forced, not a real breach
    for bundle in report["majorization_violations"]:
        assert bundle["conjecture_id"] == "C4"
        assert reverify_bundle(bundle).satisfied
