# src/rearrangement/domain/services/worst_case.py
"""Draws from the least favourable null configuration."""

import numpy as np


def worst_case_draws(q: int, rho: float, n: int, rng: np.random.Generator) -> np.ndarray:
    """(n, q+1) array: treated N(0, rho^2), q-1 controls N(0, 1), one control at 0."""
    x = np.zeros((n, q + 1))
    x[:, 0] = rho * rng.standard_normal(n)
    x[:, 1:q] = rng.standard_normal((n, q - 1))
    return x
