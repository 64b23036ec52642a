# src/estimators/domain/services/least_squares.py
"""Least squares through a column-pivoted QR decomposition."""

from typing import Sequence

import numpy as np
from scipy import linalg

from src.shared.domain.exceptions.base import ValidationException


def ols(
    y: Sequence[float] | np.ndarray,
    design: Sequence[Sequence[float]] | np.ndarray,
    names: Sequence[str] | None = None,
) -> np.ndarray:
    """Coefficients minimising the sum of squared residuals.

    Raises ValidationException naming the columns that make the design
    rank deficient.
    """
    y = np.asarray(y, dtype=float)
    design = np.asarray(design, dtype=float)
    if design.ndim == 1:
        design = design[:, None]
    n, p = design.shape
    if y.shape != (n,):
        raise ValidationException(f"{len(y)} outcomes for a design with {n} rows")
    names = list(names) if names is not None else [f"column {j}" for j in range(p)]
    if n < p:
        raise ValidationException(f"{n} observations for {p} coefficients")
    
    Q, R, pivot = linalg.qr(design, mode="economic", pivoting=True)
    diag = np.abs(np.diag(R))
    cutoff = max(n, p) * np.finfo(float).eps * (diag[0] if diag.size else 0.0)
    rank = int(np.sum(diag > cutoff)) if diag.size and diag[0] > 0 else 0
    if rank < p:
        collinear = [names[j] for j in sorted(pivot[rank:])]
        raise ValidationException(f"rank-deficient design; collinear columns: {', '.join(collinear)}")
    
    beta = np.empty(p)
    beta[pivot] = linalg.solve_triangular(R, Q.T @ y)
    return beta
