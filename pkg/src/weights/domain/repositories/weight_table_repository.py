# src/weights/domain/repositories/weight_table_repository.py
"""Weight table repository interface."""

from abc import ABC, abstractmethod

from src.weights.domain.entities.weight_table import WeightTable


class WeightTableRepository(ABC):
    """Persistence for weight tables."""
    
    @abstractmethod
    def load(self) -> WeightTable:
        """Stored table, empty when nothing has been stored yet."""
        pass
    
    @abstractmethod
    def save(self, table: WeightTable) -> None:
        """Replace the stored table as a whole."""
        pass
    
    @abstractmethod
    def exists(self) -> bool:
        """Whether a stored table is present."""
        pass
