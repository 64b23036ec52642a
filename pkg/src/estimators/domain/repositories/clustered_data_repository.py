# src/estimators/domain/repositories/clustered_data_repository.py
"""Observation source interface."""

from abc import ABC, abstractmethod

from src.estimators.domain.entities.clustered_data import CrossSectionData, PanelData


class ClusteredDataRepository(ABC):
    """Source of panels and cross sections."""
    
    @abstractmethod
    def load_panel(self, treated_cluster: str, first_post_time: int) -> PanelData:
        pass
    
    @abstractmethod
    def load_cross_section(self, treated_cluster: str) -> CrossSectionData:
        pass
