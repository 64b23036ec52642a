# src/monte_carlo/domain/value_objects/dgp_config.py
"""Cluster by time data generating process."""

import math
from enum import Enum
from typing import Sequence

import numpy as np

from src.shared.domain.value_objects.base import ValueObject
from src.shared.domain.exceptions.base import ValidationException


class Innovation(str, Enum):
    """Law of the unit-variance AR(1) innovations."""
    GAUSSIAN = "gaussian"
    CENTERED_CHI2_2 = "centered_chi2_2"
    
    @classmethod
    def parse(cls, value: "Innovation | str") -> "Innovation":
        if isinstance(value, Innovation):
            return value
        text = value.strip().lower().replace("-", "_")
        aliases = {"normal": cls.GAUSSIAN, "chi2": cls.CENTERED_CHI2_2, "chi_squared": cls.CENTERED_CHI2_2}
        if text in aliases:
            return aliases[text]
        try:
            return cls(text)
        except ValueError:
            raise ValidationException(f"Invalid innovation: {value}. Use gaussian or centered_chi2_2")


class DgpConfig(ValueObject):
    """Y_tk = eta_t + zeta_k + delta I_t D_k + U_tk with AR(1) errors.

    U_tk = gamma U_(t-1)k + s_k V_tk where s_k is ``sigma_treated`` for the
    treated cluster (the last) and 1 otherwise.
    """
    
    def __init__(
        self,
        q: int,
        periods: int = 10,
        post_periods: int = 4,
        gamma: float = 0.0,
        sigma_treated: float = 1.0,
        delta: float = 0.0,
        innovation: Innovation | str = Innovation.GAUSSIAN,
        eta: Sequence[float] | None = None,
        zeta: Sequence[float] | None = None,
    ):
        if q < 2:
            raise ValidationException(f"q must be at least 2, got {q}")
        if not 0 < post_periods < periods:
            raise ValidationException(f"need 0 < post_periods < periods, got {post_periods} and {periods}")
        if not -1.0 < gamma < 1.0:
            raise ValidationException(f"gamma must lie in (-1, 1), got {gamma}")
        if not (math.isfinite(sigma_treated) and sigma_treated >= 0):
            raise ValidationException(f"sigma_treated must be non-negative, got {sigma_treated}")
        if not math.isfinite(delta):
            raise ValidationException(f"delta must be finite, got {delta}")
        
        eta = tuple(float(e) for e in eta) if eta is not None else (0.0,) * periods
        zeta = tuple(float(z) for z in zeta) if zeta is not None else (0.0,) * (q + 1)
        if len(eta) != periods:
            raise ValidationException(f"eta needs {periods} time effects, got {len(eta)}")
        if len(zeta) != q + 1:
            raise ValidationException(f"zeta needs {q + 1} cluster effects, got {len(zeta)}")
        
        self.q = int(q)
        self.periods = int(periods)
        self.post_periods = int(post_periods)
        self.gamma = float(gamma)
        self.sigma_treated = float(sigma_treated)
        self.delta = float(delta)
        self.innovation = Innovation.parse(innovation)
        self.eta = eta
        self.zeta = zeta
        self._freeze()
    
    @property
    def post(self) -> np.ndarray:
        """Boolean post indicator over periods 1..T."""
        return np.arange(1, self.periods + 1) > self.periods - self.post_periods
    
    @property
    def first_post_time(self) -> int:
        return self.periods - self.post_periods + 1
    
    @property
    def scales(self) -> np.ndarray:
        """Innovation scale per cluster, treated last."""
        s = np.ones(self.q + 1)
        s[-1] = self.sigma_treated
        return s
    
    def replace(self, **changes) -> "DgpConfig":
        params = {k: v for k, v in self.as_dict().items()}
        params.update(changes)
        if "periods" in changes and "eta" not in changes:
            params["eta"] = None
        if "q" in changes and "zeta" not in changes:
            params["zeta"] = None
        return DgpConfig(**params)
