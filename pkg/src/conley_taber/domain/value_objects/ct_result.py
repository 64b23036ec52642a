# src/conley_taber/domain/value_objects/ct_result.py
"""Outcome of the Conley-Taber comparison test."""

import math
from typing import Sequence

from src.shared.domain.value_objects.base import ValueObject
from src.shared.domain.exceptions.base import ValidationException


def quantile_rank(alpha: float, q: int) -> int:
    """1-based rank ceil((1 - alpha) q) of the critical order statistic."""
    # rounding keeps (1 - .05) * 20 at rank 19
    return min(q, max(1, math.ceil(round((1.0 - alpha) * q, 9))))


class CTResult(ValueObject):
    """Treatment coefficient, placebo coefficients and the decision."""
    
    __test__ = False
    
    def __init__(self, delta_hat: float, placebo_coefficients: Sequence[float], alpha: float):
        placebo_coefficients = tuple(float(b) for b in placebo_coefficients)
        if not placebo_coefficients:
            raise ValidationException("no placebo coefficients")
        if not 0.0 < alpha < 1.0:
            raise ValidationException(f"alpha must lie in (0, 1), got {alpha}")
        
        self.delta_hat = float(delta_hat)
        self.placebo_coefficients = placebo_coefficients
        self.alpha = float(alpha)
        self.critical_value = sorted(placebo_coefficients)[quantile_rank(alpha, len(placebo_coefficients)) - 1]
        self.reject = self.delta_hat > self.critical_value
        self._freeze()
    
    @property
    def q(self) -> int:
        return len(self.placebo_coefficients)
