# src/conley_taber/domain/services/conley_taber.py
"""Conley-Taber test on cluster by time aggregates."""

import numpy as np
import structlog

from src.conley_taber.domain.value_objects.ct_result import CTResult, quantile_rank
from src.estimators.domain.entities.clustered_data import PanelData
from src.shared.domain.exceptions.base import NumericalException, ValidationException

logger = structlog.get_logger()

DEMEAN_TOL = 1e-10
DEMEAN_MAX_ITER = 10_000


def two_way_demean(values: np.ndarray, groups: tuple[np.ndarray, np.ndarray]) -> np.ndarray:
    """Residual of ``values`` (n, k) after projecting out two sets of group effects.

    Alternates between the groups until no entry moves by more than
    ``DEMEAN_TOL``; balanced panels converge after one sweep.
    """
    out = np.array(values, dtype=float, copy=True)
    counts = [np.bincount(g) for g in groups]
    for iteration in range(DEMEAN_MAX_ITER):
        change = 0.0
        for g, n in zip(groups, counts):
            means = np.stack([np.bincount(g, weights=col, minlength=len(n)) for col in out.T], axis=1) / n[:, None]
            change = max(change, float(np.max(np.abs(means))))
            out -= means[g]
        if change < DEMEAN_TOL:
            return out
    raise NumericalException(f"two-way demeaning did not converge in {DEMEAN_MAX_ITER} sweeps")


def conley_taber_test(panel: PanelData, alpha: float) -> CTResult:
    """Two-way fixed effects coefficient against the control clusters' placebo coefficients.

    Individual observations are averaged to cluster by time cells first.
    The placebo coefficient of a control cluster is the post indicator
    coefficient from regressing its residuals on a constant and the post
    indicator.
    """
    if not 0.0 < alpha < 1.0:
        raise ValidationException(f"alpha must lie in (0, 1), got {alpha}")
    if panel.covariates:
        logger.warning("Covariates ignored by the Conley-Taber test", covariates=list(panel.covariates))
    
    cells = panel.cluster_time_means()
    frame = cells.frame
    if panel.q < 1.0 / alpha:
        logger.warning("Few control clusters for the quantile", q=panel.q, alpha=alpha)
    
    cluster_codes, cluster_labels = _codes(frame["cluster"].to_numpy())
    time_codes, _ = _codes(frame["time"].to_numpy())
    post = cells.post.to_numpy()
    treated = frame["cluster"].to_numpy() == cells.treated_cluster
    
    demeaned = two_way_demean(
        np.column_stack([frame["outcome"].to_numpy(dtype=float), (post & treated).astype(float)]),
        (cluster_codes, time_codes),
    )
    y, d = demeaned[:, 0], demeaned[:, 1]
    ssd = float(d @ d)
    if ssd < 1e-12:
        raise ValidationException("rank-deficient fixed effects design; treatment indicator is absorbed")
    delta_hat = float(d @ y) / ssd
    residuals = y - delta_hat * d
    
    placebo = []
    for code, label in enumerate(cluster_labels):
        if label == cells.treated_cluster:
            continue
        mask = cluster_codes == code
        r, p = residuals[mask], post[mask]
        placebo.append(float(r[p].mean() - r[~p].mean()))
    
    result = CTResult(delta_hat, placebo, alpha)
    logger.debug("Conley-Taber test", delta_hat=delta_hat, critical_value=result.critical_value,
                 reject=result.reject, q=result.q)
    return result


def conley_taber_batch(outcomes: np.ndarray, post: np.ndarray, alpha: float) -> np.ndarray:
    """Decisions for balanced ``(n, periods, q+1)`` aggregates, treated cluster last."""
    outcomes = np.asarray(outcomes, dtype=float)
    post = np.asarray(post, dtype=bool)
    _, periods, clusters = outcomes.shape
    
    def demean(a: np.ndarray) -> np.ndarray:
        return a - a.mean(axis=-2, keepdims=True) - a.mean(axis=-1, keepdims=True) + a.mean(axis=(-2, -1), keepdims=True)
    
    d = np.zeros((periods, clusters))
    d[post, -1] = 1.0
    d = demean(d)
    y = demean(outcomes)
    delta_hat = np.einsum("ntk,tk->n", y, d) / float(np.sum(d * d))
    residuals = y - delta_hat[:, None, None] * d
    placebo = residuals[:, post, :-1].mean(axis=1) - residuals[:, ~post, :-1].mean(axis=1)
    
    q = clusters - 1
    critical = np.sort(placebo, axis=1)[:, quantile_rank(alpha, q) - 1]
    return delta_hat > critical


def _codes(values: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    labels, codes = np.unique(values, return_inverse=True)
    return codes.ravel(), labels
