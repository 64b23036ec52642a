# src/size_bound/domain/value_objects/bound_components.py
"""Decomposition of the size bound."""

from src.shared.domain.value_objects.base import ValueObject
from src.shared.domain.exceptions.base import ValidationException


class BoundComponents(ValueObject):
    """The three additive pieces of xi_q(w, rho) and their total.

    ``escape_term`` is 2^-(q+1), ``oracle_integral`` bounds the problem
    centred at the true control mean and ``centering_adjustment`` pays for
    centering at the sample control mean instead.
    """
    
    def __init__(
        self,
        q: int,
        w: float,
        rho: float,
        escape_term: float,
        oracle_integral: float,
        centering_adjustment: float,
    ):
        if q < 2:
            raise ValidationException(f"q must be at least 2, got {q}")
        if not 0.0 < w < 1.0:
            raise ValidationException(f"w must lie in (0, 1), got {w}")
        if rho <= 0:
            raise ValidationException(f"rho must be positive, got {rho}")
        for name, piece in (
            ("escape_term", escape_term),
            ("oracle_integral", oracle_integral),
            ("centering_adjustment", centering_adjustment),
        ):
            if piece < 0:
                raise ValidationException(f"{name} must be non-negative, got {piece}")
        
        self.q = int(q)
        self.w = float(w)
        self.rho = float(rho)
        self.escape_term = float(escape_term)
        self.oracle_integral = float(oracle_integral)
        self.centering_adjustment = float(centering_adjustment)
        self.total = self.escape_term + self.oracle_integral + self.centering_adjustment
        self._freeze()

    @property
    def slack(self) -> float:
        """Share of the bound taken up by its non-tight parts."""
        return self.escape_term + self.centering_adjustment
