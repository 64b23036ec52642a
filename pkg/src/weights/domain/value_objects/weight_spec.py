# src/weights/domain/value_objects/weight_spec.py
"""Weight specification value object."""

import math

from src.shared.domain.value_objects.base import ValueObject
from src.shared.domain.exceptions.base import ValidationException


class WeightSpec(ValueObject):
    """The (alpha, rho, q) triple indexing the weight table."""
    
    def __init__(self, alpha: float, rho: float, q: int):
        if not (math.isfinite(alpha) and 0.0 < alpha < 0.5):
            raise ValidationException(f"alpha must lie in (0, 0.5), got {alpha}")
        if not (math.isfinite(rho) and rho > 0):
            raise ValidationException(f"rho must be positive, got {rho}")
        if int(q) != q or q < 3:
            raise ValidationException(f"q must be an integer of at least 3, got {q}")
        
        self.alpha = float(alpha)
        self.rho = float(rho)
        self.q = int(q)
        self._freeze()

    @property
    def sort_key(self) -> tuple[float, float, int]:
        """Canonical order: alpha descending, then rho, then q."""
        return (-self.alpha, self.rho, self.q)

    def __str__(self) -> str:
        return f"alpha={self.alpha:g}, rho={self.rho:g}, q={self.q}"
