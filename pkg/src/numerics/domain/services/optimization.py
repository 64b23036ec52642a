# src/numerics/domain/services/optimization.py
"""Scan-then-refine scalar minimisation and smallest-root search."""

from typing import Callable

import numpy as np
import numpy.typing as npt
from scipy import optimize

from src.numerics.domain.value_objects.tolerance import ScalarResult, Tolerance
from src.shared.domain.exceptions.base import ValidationException

VectorFn = Callable[[npt.NDArray[np.float64]], npt.NDArray[np.float64]]

SCAN_POINTS = 400


def _check_bracket(lo: float, hi: float) -> None:
    if not (np.isfinite(lo) and np.isfinite(hi)) or lo >= hi:
        raise ValidationException(f"invalid bracket [{lo}, {hi}]")


def minimize_scalar(
    f: VectorFn,
    lo: float,
    hi: float,
    tol: Tolerance,
    scan_points: int = SCAN_POINTS,
) -> ScalarResult:
    """Minimise ``f`` on [lo, hi].

    ``f`` must accept a numpy array. It is scanned on a grid (geometric when
    ``lo > 0``, uniform otherwise) and the best grid cell is refined with
    bounded Brent (golden section with parabolic steps). The returned value
    never exceeds the grid minimum, so multimodal objectives are safe as long
    as the grid resolves their basins.
    """
    _check_bracket(lo, hi)
    
    if lo > 0:
        grid = np.geomspace(lo, hi, scan_points)
    else:
        grid = np.linspace(lo, hi, scan_points)
    values = np.asarray(f(grid), dtype=float)
    i = int(np.nanargmin(values))
    
    left = grid[max(i - 1, 0)]
    right = grid[min(i + 1, scan_points - 1)]
    res = optimize.minimize_scalar(
        lambda t: float(f(np.asarray([t]))[0]),
        bounds=(left, right),
        method="bounded",
        options={"xatol": tol.abs_tol, "maxiter": tol.max_iter},
    )
    
    if res.fun <= values[i]:
        return ScalarResult(res.x, res.fun, bool(res.success), res.nit)
    return ScalarResult(grid[i], values[i], bool(res.success), res.nit)


def find_smallest_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: Tolerance,
    step: float = 1e-3,
) -> ScalarResult | None:
    """Leftmost sign change of ``f`` on the open interval (lo, hi).

    ``f`` is evaluated lazily from left to right on the grid
    ``lo + step, lo + 2 step, ...`` and the first bracketing cell is refined
    by bisection to ``tol.abs_tol``. Returns ``None`` when the scan finds no
    sign change.
    """
    _check_bracket(lo, hi)
    if step <= 0 or step >= hi - lo:
        raise ValidationException(f"scan step must lie in (0, {hi - lo}), got {step}")
    
    n = int(round((hi - lo) / step))
    grid = lo + step * np.arange(1, n)
    
    prev_x = float(grid[0])
    prev_v = f(prev_x)
    if prev_v == 0:
        return ScalarResult(prev_x, 0.0, True, 0)
    
    for x in grid[1:]:
        x = float(x)
        v = f(x)
        if v == 0:
            return ScalarResult(x, 0.0, True, 0)
        if np.sign(v) != np.sign(prev_v):
            root, info = optimize.bisect(
                f, prev_x, x, xtol=tol.abs_tol, maxiter=tol.max_iter, full_output=True, disp=False
            )
            return ScalarResult(root, f(root), info.converged, info.iterations)
        prev_x, prev_v = x, v
    
    return None
