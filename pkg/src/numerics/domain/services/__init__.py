from src.numerics.domain.services.normal import std_normal_cdf, std_normal_pdf, std_normal_quantile
from src.numerics.domain.services.optimization import find_smallest_root, minimize_scalar
from src.numerics.domain.services.quadrature import HALFLINE_TRUNCATION, integrate_halfline

__all__ = [
    "HALFLINE_TRUNCATION",
    "find_smallest_root",
    "integrate_halfline",
    "minimize_scalar",
    "std_normal_cdf",
    "std_normal_pdf",
    "std_normal_quantile",
]
