# src/size_bound/domain/services/tightness.py
"""Tightness classification of (alpha, rho, q) cells."""

from src.size_bound.domain.value_objects.tightness_grade import TightnessGrade
from src.weights.domain.services.weight_solver import compute_row
from src.weights.domain.value_objects.weight_spec import WeightSpec


def classify_tightness(q: int, alpha: float, rho: float) -> TightnessGrade:
    """Grade the cell by the slack of the bound at w_q(alpha, rho)."""
    return compute_row(WeightSpec(alpha, rho, q)).grade
