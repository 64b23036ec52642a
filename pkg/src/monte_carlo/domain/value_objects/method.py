# src/monte_carlo/domain/value_objects/method.py
"""Tests compared in the simulations."""

from src.rearrangement.domain.value_objects.direction import Direction
from src.shared.domain.value_objects.base import ValueObject
from src.shared.domain.exceptions.base import ValidationException


class RearrangementMethod(ValueObject):
    name = "rearrangement"
    
    def __init__(self, alpha: float, rho: float, direction: Direction | str = Direction.UPPER):
        if not 0.0 < alpha < 1.0:
            raise ValidationException(f"alpha must lie in (0, 1), got {alpha}")
        if rho <= 0:
            raise ValidationException(f"rho must be positive, got {rho}")
        self.alpha = float(alpha)
        self.rho = float(rho)
        self.direction = Direction.parse(direction)
        self._freeze()


class ConleyTaberMethod(ValueObject):
    name = "conley_taber"
    rho = None
    
    def __init__(self, alpha: float):
        if not 0.0 < alpha < 1.0:
            raise ValidationException(f"alpha must lie in (0, 1), got {alpha}")
        self.alpha = float(alpha)
        self._freeze()


Method = RearrangementMethod | ConleyTaberMethod
