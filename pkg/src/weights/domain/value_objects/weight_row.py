# src/weights/domain/value_objects/weight_row.py
"""One row of the weight table."""

from src.shared.domain.value_objects.base import ValueObject
from src.shared.domain.exceptions.base import ValidationException
from src.size_bound.domain.value_objects.tightness_grade import TightnessGrade
from src.weights.domain.value_objects.weight_spec import WeightSpec


class WeightRow(ValueObject):
    """Weight and tightness grade for one spec; weight is None iff infeasible."""
    
    def __init__(self, spec: WeightSpec, weight: float | None, grade: TightnessGrade):
        if (weight is None) == grade.feasible:
            raise ValidationException(
                f"weight must be present exactly when the grade is feasible ({spec}, grade={grade})"
            )
        if weight is not None and not 0.0 < weight < 1.0:
            raise ValidationException(f"weight must lie in (0, 1), got {weight}")
        
        self.spec = spec
        self.weight = None if weight is None else float(weight)
        self.grade = grade
        self._freeze()
