# src/rearrangement/domain/value_objects/direction.py
"""Alternative hypothesis direction."""

from enum import Enum

from src.shared.domain.exceptions.base import ValidationException


class Direction(str, Enum):
    """Side of the alternative."""
    UPPER = "upper"
    LOWER = "lower"
    TWO_SIDED = "two-sided"
    
    @classmethod
    def parse(cls, value: "Direction | str") -> "Direction":
        if isinstance(value, Direction):
            return value
        try:
            return cls(value.strip().lower().replace("_", "-"))
        except ValueError:
            raise ValidationException(
                f"Invalid direction: {value}. Use one of upper, lower, two-sided"
            )
    
    def level(self, alpha: float) -> float:
        """Level at which the weight is chosen; two-sided tests split alpha."""
        return alpha / 2 if self is Direction.TWO_SIDED else alpha
