# src/weights/domain/services/weight_solver.py
"""Smallest weight w with xi_q(w, rho) = alpha."""

import structlog

from src.numerics.domain.services.optimization import find_smallest_root
from src.numerics.domain.value_objects.tolerance import Tolerance
from src.size_bound.domain.services.size_bound import size_bound
from src.size_bound.domain.value_objects.tightness_grade import TightnessGrade
from src.weights.domain.value_objects.weight_row import WeightRow
from src.weights.domain.value_objects.weight_spec import WeightSpec

logger = structlog.get_logger()

# xi_q can turn up again near w = 1, so the smallest root is found by scanning.
ROOT_STEP = 1e-3
ROOT_TOL = Tolerance(abs_tol=1e-7, max_iter=100)


def solve_weight(alpha: float, rho: float, q: int) -> float | None:
    """Smallest root of xi_q(., rho) - alpha on (0, 1), ignoring tightness."""
    result = find_smallest_root(
        lambda w: size_bound(q, w, rho).total - alpha,
        0.0,
        1.0,
        ROOT_TOL,
        step=ROOT_STEP,
    )
    if result is None:
        logger.debug("No root for size bound", alpha=alpha, rho=rho, q=q)
        return None
    return result.x


def compute_row(spec: WeightSpec) -> WeightRow:
    """Weight and grade for one spec."""
    root = solve_weight(spec.alpha, spec.rho, spec.q)
    slack = None if root is None else size_bound(spec.q, root, spec.rho).slack
    grade = TightnessGrade.from_slack(spec.alpha, slack)
    
    row = WeightRow(spec, root if grade.feasible else None, grade)
    logger.debug("Weight computed", alpha=spec.alpha, rho=spec.rho, q=spec.q,
                 weight=row.weight, grade=grade.grade.value)
    return row


def weight(spec: WeightSpec) -> float | None:
    """w_q(alpha, rho), or None for an infeasible combination."""
    return compute_row(spec).weight
