from src.size_bound.domain.services.size_bound import (
    bound_curve,
    centering_adjustment,
    oracle_integral,
    size_bound,
)

__all__ = ["bound_curve", "centering_adjustment", "oracle_integral", "size_bound"]
