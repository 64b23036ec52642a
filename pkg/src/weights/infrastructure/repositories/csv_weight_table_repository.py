# src/weights/infrastructure/repositories/csv_weight_table_repository.py
"""CSV implementation of WeightTableRepository."""

from pathlib import Path

import pandas as pd
import structlog

from src.shared.domain.exceptions.base import ValidationException
from src.shared.infrastructure.files.atomic import write_frame_csv
from src.size_bound.domain.value_objects.tightness_grade import TightnessGrade
from src.weights.domain.entities.weight_table import WeightTable
from src.weights.domain.repositories.weight_table_repository import WeightTableRepository
from src.weights.domain.value_objects.weight_row import WeightRow
from src.weights.domain.value_objects.weight_spec import WeightSpec

logger = structlog.get_logger()

COLUMNS = ["alpha", "rho", "q", "weight", "grade"]


def format_param(value: float) -> str:
    """Shortest text that reads back to the same alpha or rho."""
    return f"{value:.12g}"


def format_weight(value: float | None) -> str:
    return "" if value is None else f"{value:.6f}"


def table_to_frame(table: WeightTable) -> pd.DataFrame:
    """Canonical string frame in file column order."""
    records = [
        {
            "alpha": format_param(row.spec.alpha),
            "rho": format_param(row.spec.rho),
            "q": str(row.spec.q),
            "weight": format_weight(row.weight),
            "grade": row.grade.grade.value,
        }
        for row in table
    ]
    return pd.DataFrame.from_records(records, columns=COLUMNS)


def write_table_csv(table: WeightTable, path: Path) -> None:
    """Replace the whole file; a failed write leaves the old file intact."""
    write_frame_csv(table_to_frame(table), path)


def read_table_csv(path: Path) -> WeightTable:
    frame = pd.read_csv(path, dtype=str, keep_default_na=False)
    if list(frame.columns) != COLUMNS:
        raise ValidationException(
            f"weight file {path} must have header {','.join(COLUMNS)}, got {','.join(frame.columns)}"
        )
    
    table = WeightTable()
    for record in frame.itertuples(index=False):
        try:
            spec = WeightSpec(float(record.alpha), float(record.rho), int(record.q))
            weight = float(record.weight) if record.weight != "" else None
        except ValueError as e:
            raise ValidationException(f"malformed row in {path}: {record}") from e
        table.add(WeightRow(spec, weight, TightnessGrade(record.grade)))
    return table


class CsvWeightTableRepository(WeightTableRepository):
    """Weight table stored as `alpha,rho,q,weight,grade` text."""
    
    def __init__(self, path: Path | str):
        self.path = Path(path).expanduser()
    
    def exists(self) -> bool:
        return self.path.is_file()
    
    def load(self) -> WeightTable:
        """Stored table, or an empty table when the file is absent."""
        if not self.exists():
            return WeightTable()
        try:
            table = read_table_csv(self.path)
        except Exception as e:
            logger.error("Error reading weight table", path=str(self.path), error=str(e))
            raise
        logger.debug("Weight table loaded", path=str(self.path), rows=len(table))
        return table
    
    def save(self, table: WeightTable) -> None:
        write_table_csv(table, self.path)
        logger.info("Weight table saved", path=str(self.path), rows=len(table))
