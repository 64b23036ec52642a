# src/rearrangement/domain/services/decision.py
"""Rearrangement test decisions."""

from typing import Callable

import numpy as np
import structlog

from src.rearrangement.domain.services.statistic import check_weight
from src.rearrangement.domain.value_objects.direction import Direction
from src.rearrangement.domain.value_objects.estimate_vector import EstimateVector
from src.rearrangement.domain.value_objects.test_decision import TestDecision
from src.shared.domain.exceptions.base import InfeasibleWeightException, ValidationException
from src.weights.domain.services.weight_solver import weight
from src.weights.domain.value_objects.weight_spec import WeightSpec

logger = structlog.get_logger()

WeightProvider = Callable[[WeightSpec], float | None]

# xi_q is only defined from three controls on
MIN_CONTROLS = 3


def reject_upper(x: EstimateVector, w: float) -> bool:
    """min{(1+w) D, (1-w) D} > max_k (X_0k - mean); exact ties do not reject.

    Equivalent to T(S) = T(S sorted descending) whenever no ties occur.
    """
    check_weight(w)
    delta = x.delta
    if delta <= 0:
        return False
    return (1 - w) * delta > float(np.max(x.recentered_controls()))


def reject_upper_batch(x: np.ndarray, w: float) -> np.ndarray:
    """Row-wise ``reject_upper`` for an (n, q+1) array of estimate vectors."""
    check_weight(w)
    x = np.atleast_2d(x)
    controls = x[:, 1:]
    mean = controls.mean(axis=1)
    delta = x[:, 0] - mean
    return (delta > 0) & ((1 - w) * delta > controls.max(axis=1) - mean)


def resolve_weight(alpha: float, rho: float, q: int, weight_of: WeightProvider = weight) -> float:
    """Weight for the cell, raising when the combination is infeasible."""
    if q < MIN_CONTROLS:
        raise InfeasibleWeightException(alpha, rho, q)
    w = weight_of(WeightSpec(alpha, rho, q))
    if w is None:
        raise InfeasibleWeightException(alpha, rho, q)
    return w


def run_test(
    x: EstimateVector,
    alpha: float,
    rho: float,
    direction: Direction | str = Direction.UPPER,
    shift: float = 0.0,
    weight_of: WeightProvider = weight,
) -> TestDecision:
    """Rearrangement test of theta_1 = theta_0 + shift against ``direction``."""
    direction = Direction.parse(direction)
    if not 0.0 < alpha < 1.0:
        raise ValidationException(f"alpha must lie in (0, 1), got {alpha}")
    
    alpha_used = direction.level(alpha)
    w = resolve_weight(alpha_used, rho, x.q, weight_of)
    
    y = x.shifted(shift)
    if direction is Direction.UPPER:
        reject = reject_upper(y, w)
    elif direction is Direction.LOWER:
        reject = reject_upper(y.negated(), w)
    else:
        reject = reject_upper(y, w) or reject_upper(y.negated(), w)
    
    recentered = y.recentered_controls()
    decision = TestDecision(
        reject=reject,
        direction=direction,
        alpha=alpha,
        alpha_used=alpha_used,
        rho=rho,
        w_used=w,
        shift=shift,
        delta=y.delta,
        max_recentered_control=float(recentered.max()),
        min_recentered_control=float(recentered.min()),
        min_weighted_pair=min((1 + w) * y.delta, (1 - w) * y.delta),
    )
    logger.debug("Rearrangement test", q=x.q, alpha=alpha, rho=rho, direction=direction.value,
                 weight=w, reject=reject)
    return decision
