from src.rearrangement.infrastructure.repositories.csv_estimate_repository import (
    CsvEstimateRepository,
    read_estimates_csv,
)

__all__ = ["CsvEstimateRepository", "read_estimates_csv"]
