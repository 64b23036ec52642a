# src/estimators/domain/services/cluster_estimates.py
"""One least squares fit per cluster, collected into an EstimateVector."""

import numpy as np
import pandas as pd
import structlog

from src.estimators.domain.entities.clustered_data import ClusteredData, CrossSectionData, PanelData
from src.estimators.domain.services.least_squares import ols
from src.estimators.domain.value_objects.regression_fit import RegressionFit
from src.estimators.domain.value_objects.unit_effects import UnitEffects
from src.rearrangement.domain.value_objects.estimate_vector import EstimateVector

logger = structlog.get_logger()


def resolve_unit_effects(panel: PanelData, mode: UnitEffects | str = UnitEffects.AUTO) -> bool:
    """Whether unit effects are absorbed by within-unit demeaning."""
    mode = UnitEffects.parse(mode)
    if mode is UnitEffects.AUTO:
        return panel.units_span_break()
    return mode is UnitEffects.ON


def fit_did_cluster(rows: pd.DataFrame, cluster: str, covariates: tuple[str, ...],
                    first_post_time: int, within_unit: bool) -> RegressionFit:
    """Outcome on the post indicator and covariates for one cluster."""
    post = (rows["time"] >= first_post_time).astype(float).to_numpy()
    regressors = np.column_stack([post, rows[list(covariates)].to_numpy(dtype=float)])
    y = rows["outcome"].to_numpy(dtype=float)
    names = ["post", *covariates]
    
    if within_unit:
        units = rows["unit"].to_numpy()
        regressors = regressors - pd.DataFrame(regressors).groupby(units).transform("mean").to_numpy()
        y = y - pd.Series(y).groupby(units).transform("mean").to_numpy()
        design = regressors
    else:
        design = np.column_stack([np.ones(len(y)), regressors])
        names = ["const", *names]
    
    beta = ols(y, design, [f"{name} (cluster {cluster})" for name in names])
    target = names.index("post")
    return RegressionFit(
        target=beta[target],
        slope_coefficients=beta[target + 1:],
        cluster=cluster,
        n_obs=len(y),
        n_coefficients=len(names),
    )


def did_cluster_fits(panel: PanelData, unit_effects: UnitEffects | str = UnitEffects.AUTO) -> dict[str, RegressionFit]:
    within = resolve_unit_effects(panel, unit_effects)
    logger.debug("Fitting difference in differences", clusters=len(panel.clusters), within_unit=within)
    return {
        c: fit_did_cluster(panel.cluster_frame(c), c, panel.covariates, panel.first_post_time, within)
        for c in panel.clusters
    }


def fit_intercept_cluster(rows: pd.DataFrame, cluster: str, covariates: tuple[str, ...]) -> RegressionFit:
    """Outcome on a constant and covariates for one cluster."""
    y = rows["outcome"].to_numpy(dtype=float)
    design = np.column_stack([np.ones(len(y)), rows[list(covariates)].to_numpy(dtype=float)])
    names = [f"{name} (cluster {cluster})" for name in ("const", *covariates)]
    beta = ols(y, design, names)
    return RegressionFit(target=beta[0], slope_coefficients=beta[1:], cluster=cluster, n_obs=len(y))


def cluster_treatment_fits(data: CrossSectionData) -> dict[str, RegressionFit]:
    return {c: fit_intercept_cluster(data.cluster_frame(c), c, data.covariates) for c in data.clusters}


def _estimate_vector(data: ClusteredData, fits: dict[str, RegressionFit]) -> EstimateVector:
    controls = data.control_clusters
    return EstimateVector(
        treated=fits[data.treated_cluster].target,
        controls=[fits[c].target for c in controls],
        labels=controls,
        treated_label=data.treated_cluster,
    )


def did_cluster_estimates(panel: PanelData, unit_effects: UnitEffects | str = UnitEffects.AUTO) -> EstimateVector:
    """Post indicator coefficient of each cluster's regression."""
    return _estimate_vector(panel, did_cluster_fits(panel, unit_effects))


def cluster_treatment_estimates(data: CrossSectionData) -> EstimateVector:
    """Intercept of each cluster's regression."""
    return _estimate_vector(data, cluster_treatment_fits(data))


def did_from_outcomes(outcomes: np.ndarray, post: np.ndarray) -> np.ndarray:
    """Post mean minus pre mean along the time axis of ``(..., periods, clusters)``.

    Equal to the post indicator coefficient when it is the only regressor.
    """
    post = np.asarray(post, dtype=bool)
    return outcomes[..., post, :].mean(axis=-2) - outcomes[..., ~post, :].mean(axis=-2)
