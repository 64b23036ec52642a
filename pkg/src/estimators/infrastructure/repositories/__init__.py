from src.estimators.infrastructure.repositories.csv_clustered_data_repository import (
    CsvClusteredDataRepository,
    read_cross_section_csv,
    read_panel_csv,
    write_panel_csv,
)

__all__ = ["CsvClusteredDataRepository", "read_cross_section_csv", "read_panel_csv", "write_panel_csv"]
