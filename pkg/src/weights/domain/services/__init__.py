from src.weights.domain.services.weight_solver import compute_row, solve_weight, weight

__all__ = ["compute_row", "solve_weight", "weight"]
