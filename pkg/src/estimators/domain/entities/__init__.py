from src.estimators.domain.entities.clustered_data import ClusteredData, CrossSectionData, PanelData

__all__ = ["ClusteredData", "CrossSectionData", "PanelData"]
