from src.weights.domain.value_objects.weight_row import WeightRow
from src.weights.domain.value_objects.weight_spec import WeightSpec

__all__ = ["WeightRow", "WeightSpec"]
