from src.size_bound.infrastructure.repositories.csv_bound_curve_writer import COLUMNS, write_curve_csv

__all__ = ["COLUMNS", "write_curve_csv"]
