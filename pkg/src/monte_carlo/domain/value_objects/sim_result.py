# src/monte_carlo/domain/value_objects/sim_result.py
"""Rejection frequency of one simulation cell."""

import math

from src.monte_carlo.domain.value_objects.dgp_config import DgpConfig
from src.monte_carlo.domain.value_objects.method import Method
from src.shared.domain.value_objects.base import ValueObject
from src.shared.domain.exceptions.base import ValidationException


def mc_standard_error(rate: float, replications: int) -> float:
    return math.sqrt(rate * (1.0 - rate) / replications)


class SimResult(ValueObject):
    """Cell parameters with its rejection count, rate and Monte Carlo error."""
    
    def __init__(self, method: Method, cfg: DgpConfig, replications: int, rejections: int, master_seed: int):
        if not 0 <= rejections <= replications:
            raise ValidationException(f"{rejections} rejections in {replications} replications")
        self.method = method
        self.cfg = cfg
        self.replications = int(replications)
        self.rejections = int(rejections)
        self.master_seed = int(master_seed)
        self._freeze()
    
    @property
    def reject_rate(self) -> float:
        return self.rejections / self.replications
    
    @property
    def mc_standard_error(self) -> float:
        return mc_standard_error(self.reject_rate, self.replications)


class RateEstimate(ValueObject):
    """Rejection count over independent draws."""
    
    def __init__(self, rejections: int, replications: int):
        if replications < 1 or not 0 <= rejections <= replications:
            raise ValidationException(f"{rejections} rejections in {replications} replications")
        self.rejections = int(rejections)
        self.replications = int(replications)
        self._freeze()
    
    @property
    def rate(self) -> float:
        return self.rejections / self.replications
    
    @property
    def mc_standard_error(self) -> float:
        return mc_standard_error(self.rate, self.replications)
