from src.weights.domain.repositories.weight_table_repository import WeightTableRepository

__all__ = ["WeightTableRepository"]
