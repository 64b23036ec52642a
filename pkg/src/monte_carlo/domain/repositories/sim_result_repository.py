# src/monte_carlo/domain/repositories/sim_result_repository.py
"""Simulation output interface."""

from abc import ABC, abstractmethod
from typing import Sequence

from src.monte_carlo.domain.value_objects.sim_result import SimResult


class SimResultRepository(ABC):
    """Destination for simulation results."""
    
    @abstractmethod
    def save(self, results: Sequence[SimResult]) -> None:
        """Replace the stored results as a whole."""
        pass
