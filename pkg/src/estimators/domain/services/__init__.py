from src.estimators.domain.services.cluster_estimates import (
    cluster_treatment_estimates,
    cluster_treatment_fits,
    did_cluster_estimates,
    did_cluster_fits,
    did_from_outcomes,
    resolve_unit_effects,
)
from src.estimators.domain.services.least_squares import ols

__all__ = [
    "cluster_treatment_estimates",
    "cluster_treatment_fits",
    "did_cluster_estimates",
    "did_cluster_fits",
    "did_from_outcomes",
    "ols",
    "resolve_unit_effects",
]
