# src/estimators/infrastructure/repositories/csv_clustered_data_repository.py
"""CSV implementation of ClusteredDataRepository."""

from pathlib import Path

import pandas as pd
import structlog

from src.estimators.domain.entities.clustered_data import CrossSectionData, PanelData
from src.estimators.domain.repositories.clustered_data_repository import ClusteredDataRepository
from src.shared.domain.exceptions.base import NotFoundException, ValidationException
from src.shared.infrastructure.files.atomic import write_frame_csv

logger = structlog.get_logger()

PANEL_COLUMNS = ["unit", "cluster", "time", "outcome"]
CROSS_SECTION_COLUMNS = ["unit", "cluster", "outcome"]


def _read(path: Path, leading: list[str]) -> pd.DataFrame:
    frame = pd.read_csv(path, dtype={"unit": str, "cluster": str})
    if list(frame.columns[: len(leading)]) != leading:
        raise ValidationException(
            f"{path} must start with header {','.join(leading)}[,x1,...], got {','.join(frame.columns)}"
        )
    return frame


def read_panel_csv(path: Path, treated_cluster: str, first_post_time: int) -> PanelData:
    """`unit,cluster,time,outcome[,x1,...]` rows."""
    return PanelData(_read(path, PANEL_COLUMNS), treated_cluster, first_post_time)


def read_cross_section_csv(path: Path, treated_cluster: str) -> CrossSectionData:
    """`unit,cluster,outcome[,x1,...]` rows."""
    return CrossSectionData(_read(path, CROSS_SECTION_COLUMNS), treated_cluster)


def write_panel_csv(panel: PanelData, path: Path) -> None:
    write_frame_csv(panel.frame, path)


class CsvClusteredDataRepository(ClusteredDataRepository):
    """Observations stored as comma-separated text."""
    
    def __init__(self, path: Path | str):
        self.path = Path(path).expanduser()
    
    def _check(self) -> None:
        if not self.path.is_file():
            raise NotFoundException(f"data file not found: {self.path}")
    
    def load_panel(self, treated_cluster: str, first_post_time: int) -> PanelData:
        self._check()
        panel = read_panel_csv(self.path, treated_cluster, first_post_time)
        logger.debug("Panel loaded", path=str(self.path), rows=len(panel), clusters=len(panel.clusters))
        return panel
    
    def load_cross_section(self, treated_cluster: str) -> CrossSectionData:
        self._check()
        data = read_cross_section_csv(self.path, treated_cluster)
        logger.debug("Cross section loaded", path=str(self.path), rows=len(data), clusters=len(data.clusters))
        return data
