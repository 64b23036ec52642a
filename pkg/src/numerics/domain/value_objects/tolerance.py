# src/numerics/domain/value_objects/tolerance.py
"""Tolerance and scalar result value objects."""

import math

from src.shared.domain.value_objects.base import ValueObject
from src.shared.domain.exceptions.base import ValidationException


class Tolerance(ValueObject):
    """Error targets and iteration cap for a numerical routine."""
    
    def __init__(self, abs_tol: float, rel_tol: float = 0.0, max_iter: int = 200):
        if not math.isfinite(abs_tol) or abs_tol <= 0:
            raise ValidationException(f"abs_tol must be positive, got {abs_tol}")
        if not math.isfinite(rel_tol) or rel_tol < 0:
            raise ValidationException(f"rel_tol must be non-negative, got {rel_tol}")
        if int(max_iter) != max_iter or max_iter < 1:
            raise ValidationException(f"max_iter must be a positive integer, got {max_iter}")
        
        self.abs_tol = float(abs_tol)
        self.rel_tol = float(rel_tol)
        self.max_iter = int(max_iter)
        self._freeze()


class ScalarResult(ValueObject):
    """Outcome of a scalar minimisation or root search."""
    
    def __init__(self, argmin_or_root: float, value: float, converged: bool, iterations: int):
        self.argmin_or_root = float(argmin_or_root)
        self.value = float(value)
        self.converged = bool(converged)
        self.iterations = int(iterations)
        self._freeze()

    @property
    def x(self) -> float:
        """Location of the minimum or root."""
        return self.argmin_or_root
