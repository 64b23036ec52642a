from src.monte_carlo.infrastructure.repositories.csv_sim_result_repository import (
    COLUMNS,
    CsvSimResultRepository,
    results_to_frame,
)

__all__ = ["COLUMNS", "CsvSimResultRepository", "results_to_frame"]
