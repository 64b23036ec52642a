# src/numerics/domain/services/quadrature.py
"""Integration over the positive half-line."""

from typing import Callable

import structlog
from scipy import integrate

from src.numerics.domain.value_objects.tolerance import Tolerance
from src.shared.domain.exceptions.base import NumericalException

logger = structlog.get_logger()

# Every integrand here is bounded by phi(y); the mass beyond 9 is below 1e-18.
HALFLINE_TRUNCATION = 9.0


def integrate_halfline(
    f: Callable[[float], float],
    tol: Tolerance,
    upper: float = HALFLINE_TRUNCATION,
) -> float:
    """Integral of ``f`` over [0, inf), truncated at ``upper``.

    Uses adaptive Gauss-Kronrod quadrature (QUADPACK) on [0, upper] and
    raises ``NumericalException`` instead of returning a value that missed
    ``tol.abs_tol``.
    """
    out = integrate.quad(
        f,
        0.0,
        upper,
        epsabs=tol.abs_tol,
        epsrel=tol.rel_tol,
        limit=tol.max_iter,
        full_output=1,
    )
    value, abserr = out[0], out[1]
    
    # a fourth element is only present when QUADPACK flags a problem
    if len(out) > 3 or abserr > max(tol.abs_tol, tol.rel_tol * abs(value)):
        message = out[3] if len(out) > 3 else "error estimate above tolerance"
        logger.error("Quadrature failed", abserr=abserr, abs_tol=tol.abs_tol, reason=message)
        raise NumericalException(f"half-line quadrature did not converge: {message}")
    
    return float(value)
