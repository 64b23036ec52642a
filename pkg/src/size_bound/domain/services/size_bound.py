# src/size_bound/domain/services/size_bound.py
"""Size bound xi_q(w, rho) for the rearrangement test."""

import math
from typing import Iterable

import numpy as np

from src.numerics.domain.services.normal import std_normal_cdf, std_normal_pdf
from src.numerics.domain.services.optimization import minimize_scalar
from src.numerics.domain.services.quadrature import integrate_halfline
from src.numerics.domain.value_objects.tolerance import Tolerance
from src.shared.domain.exceptions.base import ValidationException
from src.size_bound.domain.value_objects.bound_components import BoundComponents

QUAD_TOL = Tolerance(abs_tol=1e-10, max_iter=200)
T_TOL = Tolerance(abs_tol=1e-8, max_iter=500)
# The objective is >= 1 at t in {0, inf} and < 1 at t = 1/q.
T_BRACKET = (1e-8, 50.0)


def _check_w_rho(w: float, rho: float | None = None) -> None:
    if not 0.0 < w < 1.0:
        raise ValidationException(f"w must lie in (0, 1), got {w}")
    if rho is not None and not (math.isfinite(rho) and rho > 0):
        raise ValidationException(f"rho must be positive, got {rho}")


def centering_adjustment(q: int, w: float) -> float:
    """min over t > 0 of Phi(sqrt(q-1) w t)^(q-1) + 2 Phi(-q t)."""
    if q <= 2:
        raise ValidationException(f"centering adjustment needs q >= 3, got {q}")
    _check_w_rho(w)
    
    slope = math.sqrt(q - 1) * w
    
    def objective(t: np.ndarray) -> np.ndarray:
        return std_normal_cdf(slope * t) ** (q - 1) + 2.0 * std_normal_cdf(-q * t)
    
    return minimize_scalar(objective, *T_BRACKET, T_TOL).value


def oracle_integral(q: int, w: float, rho: float) -> float:
    """Integral over y > 0 of Phi((1-w) rho y)^(q-1) phi(y)."""
    if q < 2:
        raise ValidationException(f"oracle integral needs q >= 2, got {q}")
    _check_w_rho(w, rho)
    
    slope = (1.0 - w) * rho
    
    def integrand(y: float) -> float:
        return std_normal_cdf(slope * y) ** (q - 1) * std_normal_pdf(y)
    
    return integrate_halfline(integrand, QUAD_TOL)


def size_bound(q: int, w: float, rho: float) -> BoundComponents:
    """All three components of xi_q(w, rho) and their total."""
    return BoundComponents(
        q=q,
        w=w,
        rho=rho,
        escape_term=2.0 ** -(q + 1),
        oracle_integral=oracle_integral(q, w, rho),
        centering_adjustment=centering_adjustment(q, w),
    )


def bound_curve(q: int, rho: float, ws: Iterable[float]) -> list[BoundComponents]:
    """xi_q(., rho) on a grid of weights, in input order."""
    return [size_bound(q, w, rho) for w in ws]
