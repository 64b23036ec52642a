from src.weights.domain.entities.weight_table import WeightTable

__all__ = ["WeightTable"]
