# src/estimators/domain/value_objects/unit_effects.py
"""How unit fixed effects enter the difference-in-differences fits."""

from enum import Enum

from src.shared.domain.exceptions.base import ValidationException


class UnitEffects(str, Enum):
    """auto absorbs unit effects when every unit spans the break."""
    AUTO = "auto"
    ON = "on"
    OFF = "off"
    
    @classmethod
    def parse(cls, value: "UnitEffects | str") -> "UnitEffects":
        if isinstance(value, UnitEffects):
            return value
        try:
            return cls(value.strip().lower())
        except ValueError:
            raise ValidationException(f"Invalid unit effects mode: {value}. Use auto, on or off")
