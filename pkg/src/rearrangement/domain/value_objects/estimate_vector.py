# src/rearrangement/domain/value_objects/estimate_vector.py
"""Cluster-level estimates: one treated cluster and q controls."""

import math
from collections import Counter
from typing import Sequence

import numpy as np
import structlog

from src.shared.domain.value_objects.base import ValueObject
from src.shared.domain.exceptions.base import BusinessRuleException, ValidationException

logger = structlog.get_logger()


class EstimateVector(ValueObject):
    """X = (X_1, X_01, ..., X_0q) with optional cluster labels.

    ``labels`` lists the control clusters in the order of ``controls``.
    """
    
    def __init__(
        self,
        treated: float,
        controls: Sequence[float],
        labels: Sequence[str] | None = None,
        treated_label: str | None = None,
    ):
        controls = tuple(float(c) for c in controls)
        if len(controls) < 2:
            raise ValidationException(f"need at least 2 control clusters, got {len(controls)}")
        if not math.isfinite(treated) or not all(math.isfinite(c) for c in controls):
            raise ValidationException("estimates must be finite")
        if labels is not None:
            labels = tuple(str(label) for label in labels)
            if len(labels) != len(controls):
                raise ValidationException(
                    f"{len(labels)} labels for {len(controls)} control estimates"
                )
        
        ties = sum(n - 1 for n in Counter(controls).values())
        if ties == len(controls) - 1:
            raise BusinessRuleException(
                "all control estimates are identical; at most one control may have zero "
                "variance, so check that the controls were estimated from distinct clusters"
            )
        if ties > 1:
            logger.warning("Control estimates coincide", coinciding=ties,
                           detail="more than one pair of equal controls violates the test's setting")
        
        self.treated = float(treated)
        self.controls = controls
        self.labels = labels
        self.treated_label = None if treated_label is None else str(treated_label)
        self.coinciding_controls = ties
        self._freeze()
    
    @property
    def q(self) -> int:
        """Number of control clusters."""
        return len(self.controls)
    
    @property
    def control_mean(self) -> float:
        return math.fsum(self.controls) / self.q
    
    @property
    def delta(self) -> float:
        """Treated estimate minus the control mean."""
        return self.treated - self.control_mean
    
    def recentered_controls(self) -> np.ndarray:
        return np.asarray(self.controls) - self.control_mean
    
    def shifted(self, shift: float) -> "EstimateVector":
        """Subtract ``shift`` from the treated entry only."""
        if shift == 0:
            return self
        return EstimateVector(self.treated - shift, self.controls, self.labels, self.treated_label)
    
    def negated(self) -> "EstimateVector":
        return EstimateVector(-self.treated, [-c for c in self.controls], self.labels, self.treated_label)
    
    def as_array(self) -> np.ndarray:
        """(treated, controls...) as a float array."""
        return np.asarray((self.treated, *self.controls), dtype=float)
    
    @classmethod
    def from_array(cls, x: Sequence[float]) -> "EstimateVector":
        """Inverse of ``as_array``."""
        return cls(x[0], x[1:])
