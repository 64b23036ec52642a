from src.weights.infrastructure.repositories.csv_weight_table_repository import (
    CsvWeightTableRepository,
    read_table_csv,
    write_table_csv,
)

__all__ = ["CsvWeightTableRepository", "read_table_csv", "write_table_csv"]
