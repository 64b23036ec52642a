from src.size_bound.domain.value_objects.bound_components import BoundComponents
from src.size_bound.domain.value_objects.tightness_grade import Grade, TightnessGrade

__all__ = ["BoundComponents", "Grade", "TightnessGrade"]
