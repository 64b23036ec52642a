# src/estimators/domain/value_objects/regression_fit.py
"""Per-cluster least squares fit."""

import math
from typing import Sequence

from src.shared.domain.value_objects.base import ValueObject
from src.shared.domain.exceptions.base import ValidationException


class RegressionFit(ValueObject):
    """Target coefficient of one cluster's regression.

    ``target`` is the intercept (cluster-level treatment) or the post
    indicator coefficient (difference in differences); ``slope_coefficients``
    holds the cluster-specific covariate coefficients.
    """
    
    def __init__(
        self,
        target: float,
        slope_coefficients: Sequence[float],
        cluster: str,
        n_obs: int,
        n_coefficients: int | None = None,
    ):
        slope_coefficients = tuple(float(b) for b in slope_coefficients)
        if n_coefficients is None:
            n_coefficients = 1 + len(slope_coefficients)
        if n_obs < n_coefficients + 1:
            raise ValidationException(
                f"cluster {cluster}: {n_obs} observations for {n_coefficients} coefficients"
            )
        if not math.isfinite(target):
            raise ValidationException(f"cluster {cluster}: non-finite estimate")
        
        self.target = float(target)
        self.slope_coefficients = slope_coefficients
        self.cluster = str(cluster)
        self.n_obs = int(n_obs)
        self.n_coefficients = int(n_coefficients)
        self._freeze()
