# src/numerics/domain/services/normal.py
"""Standard normal distribution functions."""

import math

import numpy as np
import numpy.typing as npt
from scipy import special

_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)

ArrayLike = float | npt.NDArray[np.float64]


def std_normal_cdf(x: ArrayLike) -> ArrayLike:
    """Phi(x), accurate to machine precision in both tails."""
    return special.ndtr(x)


def std_normal_pdf(x: ArrayLike) -> ArrayLike:
    """phi(x) = exp(-x^2/2) / sqrt(2 pi)."""
    return _INV_SQRT_2PI * np.exp(-0.5 * np.square(x))


def std_normal_quantile(p: ArrayLike) -> ArrayLike:
    """Inverse of std_normal_cdf on (0, 1)."""
    return special.ndtri(p)
