import numpy as np
import pandas as pd
import pytest

from src.estimators.domain.entities import CrossSectionData, PanelData
from src.estimators.domain.services import (
    cluster_treatment_estimates,
    did_cluster_estimates,
    did_cluster_fits,
    did_from_outcomes,
    ols,
    resolve_unit_effects,
)
from src.estimators.infrastructure.repositories import CsvClusteredDataRepository
from src.monte_carlo.domain.services import simulate_outcomes, simulate_panel
from src.monte_carlo.domain.value_objects import DgpConfig
from src.shared.domain.exceptions.base import NotFoundException, ValidationException


def aggregated_panel(outcomes: dict[str, list[float]], treated: str, first_post: int) -> PanelData:
    rows = [
        {"unit": c, "cluster": c, "time": t + 1, "outcome": y}
        for c, ys in outcomes.items()
        for t, y in enumerate(ys)
    ]
    return PanelData(pd.DataFrame(rows), treated, first_post)


@pytest.fixture()
def panel():
    return aggregated_panel(
        {"A": [1.0, 3.0, 2.0, 6.0], "B": [0.0, 1.0, 1.0, 1.0], "C": [2.0, 2.0, 5.0, 3.0], "T": [1.0, 1.0, 9.0, 7.0]},
        "T",
        3,
    )


# === ols ===

def test_ols_intercept_only_is_mean():
    assert ols([1.0, 2.0, 3.0], np.ones((3, 1))) == pytest.approx([2.0])


def test_ols_exact_fit():
    design = np.column_stack([np.ones(5), np.arange(5.0)])
    assert ols(np.arange(5.0), design) == pytest.approx([0.0, 1.0], abs=1e-12)


def test_ols_residuals_orthogonal_to_columns():
    rng = np.random.default_rng(5)
    design = rng.normal(size=(50, 3))
    y = rng.normal(size=50)
    beta = ols(y, design)
    assert np.abs(design.T @ (y - design @ beta)).max() < 1e-8
    assert beta == pytest.approx(np.linalg.solve(design.T @ design, design.T @ y))


def test_ols_names_collinear_columns():
    x = np.arange(6.0)
    design = np.column_stack([np.ones(6), x, 2 * x])
    with pytest.raises(ValidationException, match="collinear columns") as err:
        ols(np.ones(6), design, ["const", "x", "twice x"])
    assert "x" in str(err.value)


def test_ols_shape_mismatch():
    with pytest.raises(ValidationException):
        ols([1.0, 2.0], np.ones((3, 1)))


# === difference in differences ===

def test_did_is_post_mean_minus_pre_mean(panel):
    x = did_cluster_estimates(panel)
    assert x.treated == pytest.approx(7.0)
    assert dict(zip(x.labels, x.controls)) == pytest.approx({"A": 2.0, "B": 0.5, "C": 2.0})
    assert x.treated_label == "T"


def test_did_shifts_treated_only_when_effect_added(panel):
    frame = panel.frame.copy()
    frame.loc[(frame["cluster"] == "T") & (frame["time"] >= 3), "outcome"] += 2.5
    moved = did_cluster_estimates(PanelData(frame, "T", 3))
    base = did_cluster_estimates(panel)
    assert moved.treated == pytest.approx(base.treated + 2.5)
    assert moved.controls == pytest.approx(base.controls)


def test_did_matches_two_means_on_simulated_panel():
    cfg = DgpConfig(q=12, gamma=0.5, sigma_treated=2.0, delta=1.0)
    panel = simulate_panel(cfg, 7)
    outcomes = simulate_outcomes(cfg, np.random.default_rng(7))
    direct = did_from_outcomes(outcomes, cfg.post)
    x = did_cluster_estimates(panel)
    assert x.treated == pytest.approx(direct[-1], abs=1e-10)
    assert x.controls == pytest.approx(list(direct[:-1]), abs=1e-10)


def test_did_row_order_does_not_matter(panel):
    shuffled = panel.frame.sample(frac=1.0, random_state=3)
    assert did_cluster_estimates(PanelData(shuffled, "T", 3)) == did_cluster_estimates(panel)


def test_constant_shift_moves_every_estimate_equally():
    frame = pd.DataFrame({
        "unit": list("aabbccdd"), "cluster": list("AABBCCDD"), "outcome": [1, 2, 3, 5, 2, 2, 7, 9.0],
    })
    base = cluster_treatment_estimates(CrossSectionData(frame, "D"))
    moved = cluster_treatment_estimates(CrossSectionData(frame.assign(outcome=frame["outcome"] + 4), "D"))
    assert moved.treated == pytest.approx(base.treated + 4)
    assert moved.controls == pytest.approx([c + 4 for c in base.controls])


def test_cluster_without_post_period_is_named():
    frame = pd.DataFrame({
        "unit": ["A", "A", "B", "C", "C", "T", "T"],
        "cluster": ["A", "A", "B", "C", "C", "T", "T"],
        "time": [1, 2, 1, 1, 2, 1, 2],
        "outcome": [1.0, 2.0, 1.0, 0.0, 1.0, 1.0, 3.0],
    })
    with pytest.raises(ValidationException, match="B"):
        PanelData(frame, "T", 2)


def test_missing_treated_cluster():
    frame = pd.DataFrame({"unit": ["a", "b", "c"], "cluster": ["A", "B", "C"], "outcome": [1.0, 2.0, 3.0]})
    with pytest.raises(NotFoundException):
        CrossSectionData(frame, "Z")


def test_within_unit_demeaning_with_two_periods_is_first_difference():
    rng = np.random.default_rng(11)
    rows = []
    for cluster in ["A", "B", "C", "T"]:
        for unit in range(6):
            level = rng.normal(scale=5)
            for t in (1, 2):
                rows.append({"unit": f"{cluster}{unit}", "cluster": cluster, "time": t,
                             "outcome": level + rng.normal() + (t == 2) * (cluster == "T") * 3.0})
    panel = PanelData(pd.DataFrame(rows), "T", 2)
    assert resolve_unit_effects(panel) is True
    x = did_cluster_estimates(panel)
    frame = panel.frame
    diffs = frame[frame.time == 2].set_index("unit").outcome - frame[frame.time == 1].set_index("unit").outcome
    by_cluster = diffs.groupby(frame.drop_duplicates("unit").set_index("unit").cluster).mean()
    assert x.treated == pytest.approx(by_cluster["T"])
    assert x.controls == pytest.approx([by_cluster[c] for c in ["A", "B", "C"]])


def test_pooled_cross_sections_use_intercept():
    frame = pd.DataFrame({
        "unit": [f"u{i}" for i in range(16)],
        "cluster": list("AAAABBBBCCCCTTTT"),
        "time": [1, 1, 2, 2] * 4,
        "outcome": [v * k for k in (1.0, 2.0, 3.0, 4.0) for v in (1.0, 3.0, 2.0, 6.0)],
    })
    panel = PanelData(frame, "T", 2)
    assert resolve_unit_effects(panel) is False
    x = did_cluster_estimates(panel)
    assert x.treated == pytest.approx(8.0)
    assert x.controls == pytest.approx([2.0, 4.0, 6.0])


def test_covariates_get_cluster_specific_coefficients():
    rng = np.random.default_rng(2)
    rows = []
    slopes = {"A": 1.0, "B": -2.0, "C": 0.5, "T": 3.0}
    for cluster, slope in slopes.items():
        for i in range(40):
            t = 1 + i % 4
            x1 = rng.normal()
            rows.append({"unit": f"{cluster}{i}", "cluster": cluster, "time": t,
                         "outcome": slope * x1 + (t >= 3) * 1.5 + 0.01 * rng.normal(), "x1": x1})
    fits = did_cluster_fits(PanelData(pd.DataFrame(rows), "T", 3))
    assert fits["B"].slope_coefficients[0] == pytest.approx(-2.0, abs=0.05)
    assert fits["T"].target == pytest.approx(1.5, abs=0.05)


# === cluster-level treatment ===

def test_cross_section_without_covariates_gives_means():
    frame = pd.DataFrame({
        "unit": list("abcdefgh"), "cluster": list("AABBCCTT"), "outcome": [1.0, 3.0, 2.0, 4.0, 0.0, 2.0, 5.0, 7.0],
    })
    x = cluster_treatment_estimates(CrossSectionData(frame, "T"))
    assert x.treated == pytest.approx(6.0)
    assert x.controls == pytest.approx([2.0, 3.0, 1.0])


def test_centered_covariates_leave_intercept_at_mean():
    rng = np.random.default_rng(4)
    frames = []
    for c in ["A", "B", "C", "T"]:
        x1 = rng.normal(size=10)
        x1 -= x1.mean()
        frames.append(pd.DataFrame({"unit": [f"{c}{i}" for i in range(10)], "cluster": c,
                                    "outcome": rng.normal(size=10) + 2 * x1, "x1": x1}))
    data = CrossSectionData(pd.concat(frames), "T")
    x = cluster_treatment_estimates(data)
    means = data.frame.groupby("cluster").outcome.mean()
    assert x.treated == pytest.approx(means["T"])
    assert x.controls == pytest.approx([means[c] for c in ["A", "B", "C"]])


def test_intercepts_recover_known_level():
    rng = np.random.default_rng(9)
    frames = []
    for k, c in enumerate(["A", "B", "C", "D", "T"]):
        x1 = rng.normal(1.0, 1.0, size=400)
        frames.append(pd.DataFrame({"unit": [f"{c}{i}" for i in range(400)], "cluster": c,
                                    "outcome": 0.7 + (k - 2) * x1 + rng.normal(size=400), "x1": x1}))
    x = cluster_treatment_estimates(CrossSectionData(pd.concat(frames), "T"))
    # intercept standard error is about sqrt(2 / 400)
    assert all(abs(v - 0.7) < 4 * np.sqrt(2 / 400) for v in [x.treated, *x.controls])


def test_single_observation_cluster_is_rank_failure():
    frame = pd.DataFrame({"unit": list("abcde"), "cluster": list("AABCT"), "outcome": [1.0, 2.0, 3.0, 4.0, 5.0]})
    with pytest.raises(ValidationException):
        cluster_treatment_estimates(CrossSectionData(frame, "T"))


# === CSV ===

def test_csv_panel_round_trip(tmp_path, panel):
    path = tmp_path / "panel.csv"
    panel.frame.to_csv(path, index=False)
    loaded = CsvClusteredDataRepository(path).load_panel("T", 3)
    assert did_cluster_estimates(loaded) == did_cluster_estimates(panel)


def test_csv_header_checked(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("cluster,unit,outcome\nA,a,1\n")
    with pytest.raises(ValidationException):
        CsvClusteredDataRepository(path).load_cross_section("A")


def test_csv_missing_file(tmp_path):
    with pytest.raises(NotFoundException):
        CsvClusteredDataRepository(tmp_path / "missing.csv").load_panel("T", 3)
