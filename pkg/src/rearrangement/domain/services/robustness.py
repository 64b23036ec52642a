# src/rearrangement/domain/services/robustness.py
"""Largest heterogeneity bound at which the test still rejects."""

import math

import structlog

from src.rearrangement.domain.services.decision import MIN_CONTROLS, WeightProvider, run_test
from src.rearrangement.domain.value_objects.direction import Direction
from src.rearrangement.domain.value_objects.estimate_vector import EstimateVector
from src.shared.domain.exceptions.base import InfeasibleWeightException, ValidationException
from src.shared.domain.value_objects.base import ValueObject
from src.size_bound.domain.services.size_bound import size_bound
from src.weights.domain.services.weight_solver import ROOT_STEP, weight

logger = structlog.get_logger()


class RobustnessResult(ValueObject):
    """Largest rejecting rho on the scan grid; ``rho`` is None if there is none."""
    
    def __init__(self, rho: float | None, saturated: bool, step: float, rho_max: float):
        self.rho = None if rho is None else float(rho)
        self.saturated = bool(saturated)
        self.step = float(step)
        self.rho_max = float(rho_max)
        self._freeze()
    
    @property
    def rho_squared(self) -> float | None:
        return None if self.rho is None else self.rho ** 2


def _has_weight_root(alpha: float, rho: float, q: int) -> bool:
    # xi decreases from its value at the first scan point, so a root exists
    # once that value exceeds alpha; this is monotone in rho.
    return size_bound(q, ROOT_STEP, rho).total > alpha


def robustness_rho(
    x: EstimateVector,
    alpha: float,
    direction: Direction | str = Direction.UPPER,
    rho_max: float = 10.0,
    step: float = 0.001,
    shift: float = 0.0,
    weight_of: WeightProvider = weight,
) -> RobustnessResult:
    """Binary search of the grid rho_k = k * step, 1 <= k <= rho_max / step.

    Rejection is monotone in rho above the smallest rho at which a weight
    exists, and infeasible cells count as non-rejections, so the rejecting
    grid points form an interval starting at that smallest feasible rho.
    """
    direction = Direction.parse(direction)
    if step <= 0 or rho_max < step:
        raise ValidationException(f"need 0 < step <= rho_max, got step={step}, rho_max={rho_max}")
    
    level = direction.level(alpha)
    n = int(math.floor(rho_max / step + 1e-9))
    if x.q < MIN_CONTROLS:
        logger.info("No weight for fewer than three controls", q=x.q)
        return RobustnessResult(None, False, step, rho_max)
    
    def rho_at(k: int) -> float:
        return round(k * step, 12)
    
    def rejects(k: int) -> bool:
        try:
            return run_test(x, alpha, rho_at(k), direction, shift, weight_of).reject
        except InfeasibleWeightException:
            return False
    
    # smallest feasible grid point
    if not _has_weight_root(level, rho_at(n), x.q):
        return RobustnessResult(None, False, step, rho_max)
    lo, hi = 1, n
    while lo < hi:
        mid = (lo + hi) // 2
        if _has_weight_root(level, rho_at(mid), x.q):
            hi = mid
        else:
            lo = mid + 1
    first = lo
    
    if not rejects(first):
        logger.info("No rejection at smallest feasible rho", rho=rho_at(first))
        return RobustnessResult(None, False, step, rho_max)
    if rejects(n):
        logger.warning("Robustness scan saturated", rho_max=rho_max)
        return RobustnessResult(rho_at(n), True, step, rho_max)
    
    # rejects(lo) holds, rejects(hi) fails
    lo, hi = first, n
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if rejects(mid):
            lo = mid
        else:
            hi = mid
    
    logger.info("Robustness scan finished", rho=rho_at(lo), alpha=alpha, direction=direction.value)
    return RobustnessResult(rho_at(lo), False, step, rho_max)
