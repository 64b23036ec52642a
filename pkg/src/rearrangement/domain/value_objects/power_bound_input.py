# src/rearrangement/domain/value_objects/power_bound_input.py
"""Inputs to the lower bound on power."""

import math
from typing import Sequence

from src.shared.domain.value_objects.base import ValueObject
from src.shared.domain.exceptions.base import ValidationException


class PowerBoundInput(ValueObject):
    """Effect, scales and weight for the power lower bound."""
    
    def __init__(self, delta: float, sigma_treated: float, sigma_controls: Sequence[float], w: float):
        sigma_controls = tuple(float(s) for s in sigma_controls)
        if not (math.isfinite(delta) and delta > 0):
            raise ValidationException(f"delta must be positive, got {delta}")
        if not (math.isfinite(sigma_treated) and sigma_treated > 0):
            raise ValidationException(f"sigma_treated must be positive, got {sigma_treated}")
        if not sigma_controls or any(not (math.isfinite(s) and s > 0) for s in sigma_controls):
            raise ValidationException("every control scale must be positive")
        if not 0.0 < w < 1.0:
            raise ValidationException(f"w must lie in (0, 1), got {w}")
        
        self.delta = float(delta)
        self.sigma_treated = float(sigma_treated)
        self.sigma_controls = sigma_controls
        self.w = float(w)
        self._freeze()
    
    @property
    def q(self) -> int:
        return len(self.sigma_controls)
