# src/rearrangement/domain/repositories/estimate_repository.py
"""Estimate vector source interface."""

from abc import ABC, abstractmethod

from src.rearrangement.domain.value_objects.estimate_vector import EstimateVector


class EstimateRepository(ABC):
    """Source of a treated estimate and its control estimates."""
    
    @abstractmethod
    def load(self) -> EstimateVector:
        """Read and validate the estimates."""
        pass
