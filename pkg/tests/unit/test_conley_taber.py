import numpy as np
import pandas as pd
import pytest

from src.conley_taber.domain.services import conley_taber_batch, conley_taber_test, two_way_demean
from src.conley_taber.domain.value_objects import CTResult, quantile_rank
from src.estimators.domain.entities import PanelData
from src.estimators.domain.services import did_from_outcomes, ols
from src.monte_carlo.domain.services import replication_seed, simulate_batch
from src.monte_carlo.domain.services.simulation import outcomes_to_panel
from src.monte_carlo.domain.value_objects import DgpConfig
from src.shared.domain.exceptions.base import ValidationException


def panel_frame(outcomes: np.ndarray, labels: list[str]) -> pd.DataFrame:
    periods, clusters = outcomes.shape
    return pd.DataFrame({
        "unit": np.tile(labels, periods),
        "cluster": np.tile(labels, periods),
        "time": np.repeat(np.arange(1, periods + 1), clusters),
        "outcome": outcomes.ravel(),
    })


@pytest.fixture()
def cfg():
    return DgpConfig(q=15, gamma=0.3, delta=0.5)


@pytest.fixture()
def outcomes(cfg):
    return simulate_batch(cfg, [replication_seed(3, 0, 0)])[0]


# === critical value ===

@pytest.mark.parametrize("alpha, q, rank", [(0.05, 20, 19), (0.05, 50, 48), (0.1, 10, 9), (0.05, 10, 10), (0.5, 3, 2)])
def test_quantile_rank(alpha, q, rank):
    assert quantile_rank(alpha, q) == rank


def test_result_rejects_only_above_critical_value():
    placebo = list(np.arange(1.0, 21.0))
    assert CTResult(19.5, placebo, 0.05).critical_value == 19.0
    assert CTResult(19.5, placebo, 0.05).reject
    assert not CTResult(19.0, placebo, 0.05).reject
    assert CTResult(21.0, placebo, 0.05).reject


def test_result_validates_alpha():
    with pytest.raises(ValidationException):
        CTResult(0.0, [1.0, 2.0], 1.0)


# === test statistic ===

def test_balanced_panel_matches_two_means(cfg, outcomes):
    result = conley_taber_test(outcomes_to_panel(cfg, outcomes), 0.05)
    did = did_from_outcomes(outcomes, cfg.post)
    control_mean = did[:-1].mean()
    assert result.delta_hat == pytest.approx(did[-1] - control_mean, abs=1e-10)
    assert result.placebo_coefficients == pytest.approx(list(did[:-1] - control_mean), abs=1e-10)


def test_unbalanced_panel_matches_dummy_regression(cfg, outcomes):
    frame = panel_frame(outcomes, [f"c{k:02d}" for k in range(cfg.q + 1)])
    frame = frame.drop(index=[3, 40, 77]).reset_index(drop=True)
    result = conley_taber_test(PanelData(frame, f"c{cfg.q:02d}", cfg.first_post_time), 0.05)
    
    cluster_dummies = pd.get_dummies(frame["cluster"], dtype=float).iloc[:, 1:]
    time_dummies = pd.get_dummies(frame["time"], dtype=float).iloc[:, 1:]
    treated = ((frame["cluster"] == f"c{cfg.q:02d}") & (frame["time"] >= cfg.first_post_time)).astype(float)
    design = np.column_stack([treated, np.ones(len(frame)), cluster_dummies, time_dummies])
    assert result.delta_hat == pytest.approx(ols(frame["outcome"], design)[0], abs=1e-8)


def test_individual_rows_are_averaged_first(cfg, outcomes):
    labels = [f"c{k:02d}" for k in range(cfg.q + 1)]
    cells = panel_frame(outcomes, labels)
    spread = pd.concat([
        cells.assign(unit=cells["cluster"] + "a", outcome=cells["outcome"] + 1.0),
        cells.assign(unit=cells["cluster"] + "b", outcome=cells["outcome"] - 1.0),
    ])
    a = conley_taber_test(PanelData(cells, labels[-1], cfg.first_post_time), 0.05)
    b = conley_taber_test(PanelData(spread, labels[-1], cfg.first_post_time), 0.05)
    assert b.delta_hat == pytest.approx(a.delta_hat, abs=1e-10)
    assert b.placebo_coefficients == pytest.approx(a.placebo_coefficients, abs=1e-10)


def test_common_shift_leaves_result_unchanged(cfg, outcomes):
    a = conley_taber_test(outcomes_to_panel(cfg, outcomes), 0.05)
    b = conley_taber_test(outcomes_to_panel(cfg, outcomes + 17.0), 0.05)
    assert b.delta_hat == pytest.approx(a.delta_hat, abs=1e-9)
    assert b.reject == a.reject


def test_relabelling_clusters_keeps_decision(cfg, outcomes):
    labels = [f"z{cfg.q - k:02d}" for k in range(cfg.q + 1)]
    relabelled = PanelData(panel_frame(outcomes, labels), labels[-1], cfg.first_post_time)
    a = conley_taber_test(outcomes_to_panel(cfg, outcomes), 0.05)
    b = conley_taber_test(relabelled, 0.05)
    assert b.delta_hat == pytest.approx(a.delta_hat, abs=1e-10)
    assert sorted(b.placebo_coefficients) == pytest.approx(sorted(a.placebo_coefficients), abs=1e-10)
    assert b.reject == a.reject


def test_large_effect_rejects(cfg, outcomes):
    outcomes = outcomes.copy()
    outcomes[cfg.post, -1] += 50.0
    assert conley_taber_test(outcomes_to_panel(cfg, outcomes), 0.05).reject


def test_invalid_alpha(cfg, outcomes):
    with pytest.raises(ValidationException):
        conley_taber_test(outcomes_to_panel(cfg, outcomes), 0.0)


# === demeaning ===

def test_two_way_demean_balanced_is_double_centering():
    rng = np.random.default_rng(1)
    table = rng.normal(size=(6, 4))
    rows, cols = np.indices(table.shape)
    out = two_way_demean(table.ravel()[:, None], (rows.ravel(), cols.ravel()))[:, 0].reshape(table.shape)
    expected = table - table.mean(axis=0) - table.mean(axis=1, keepdims=True) + table.mean()
    assert out == pytest.approx(expected, abs=1e-12)


# === batch ===

def test_batch_matches_per_panel(cfg):
    seeds = [replication_seed(11, 0, i) for i in range(25)]
    draws = simulate_batch(cfg, seeds)
    batch = conley_taber_batch(draws, cfg.post, 0.1)
    single = [conley_taber_test(outcomes_to_panel(cfg, y), 0.1).reject for y in draws]
    assert list(batch) == single
