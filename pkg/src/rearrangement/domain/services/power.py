# src/rearrangement/domain/services/power.py
"""Lower bound on the power of the rearrangement test."""

import math

import numpy as np
from scipy import special

from src.numerics.domain.services.normal import std_normal_cdf, std_normal_quantile
from src.numerics.domain.services.optimization import minimize_scalar
from src.numerics.domain.value_objects.tolerance import Tolerance
from src.rearrangement.domain.value_objects.power_bound_input import PowerBoundInput

T_TOL = Tolerance(abs_tol=1e-10, max_iter=500)
# The bound is below this beyond the end of the t-grid.
NEGLIGIBLE = 1e-16


def power_lower_bound(inp: PowerBoundInput) -> float:
    """2^q sup_t Phi(delta/sigma - t (1+w)/(1-w)) prod_k (Phi(sigma t / sigma_k) - 1/2).

    Each factor 2 (Phi(u) - 1/2) is evaluated as erf(u / sqrt 2).
    """
    ratio = (1 + inp.w) / (1 - inp.w)
    snr = inp.delta / inp.sigma_treated
    scales = inp.sigma_treated / np.asarray(inp.sigma_controls)
    
    def negative_bound(t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        factors = special.erf(np.multiply.outer(t, scales) / math.sqrt(2.0))
        return -std_normal_cdf(snr - ratio * t) * np.prod(factors, axis=-1)
    
    # Phi(snr - ratio t) < NEGLIGIBLE once t passes hi; each erf factor is at most 1
    hi = max(snr - float(std_normal_quantile(NEGLIGIBLE)), 1e-6) / ratio
    best = minimize_scalar(negative_bound, min(1e-12, hi / 2), hi, T_TOL, scan_points=2000)
    return float(min(1.0, max(0.0, -best.value)))
