# src/size_bound/domain/value_objects/tightness_grade.py
"""Tightness grade of a weight-table cell."""

from enum import Enum

from src.shared.domain.value_objects.base import ValueObject
from src.shared.domain.exceptions.base import ValidationException


class Grade(str, Enum):
    """Typography of a weight-table cell."""
    INFEASIBLE = "infeasible"
    LOOSE = "loose"
    NEAR_TIGHT = "near_tight"


class TightnessGrade(ValueObject):
    """Grade plus the slack it was derived from.

    ``slack`` is None when no weight solves xi_q(w, rho) = alpha, and for
    grades read back from a weight file.
    """
    
    def __init__(self, grade: Grade | str, slack: float | None = None):
        if isinstance(grade, str) and not isinstance(grade, Grade):
            try:
                grade = Grade(grade.strip().lower())
            except ValueError:
                raise ValidationException(f"Invalid tightness grade: {grade}")
        
        self.grade = grade
        self.slack = None if slack is None else float(slack)
        self._freeze()

    @classmethod
    def from_slack(cls, alpha: float, slack: float | None) -> "TightnessGrade":
        """Grade by the alpha/2 and alpha/10 thresholds."""
        if slack is None or slack > alpha / 2:
            return cls(Grade.INFEASIBLE, slack)
        if slack > alpha / 10:
            return cls(Grade.LOOSE, slack)
        return cls(Grade.NEAR_TIGHT, slack)

    @property
    def feasible(self) -> bool:
        return self.grade is not Grade.INFEASIBLE

    def __str__(self) -> str:
        return self.grade.value
