# src/conley_taber/application/dto/ct_dto.py
"""Conley-Taber DTOs."""

from pathlib import Path

from pydantic import Field

from src.conley_taber.domain.value_objects.ct_result import CTResult
from src.shared.application.dto.base import ReportDTO, RequestDTO


class CTRequestDTO(RequestDTO):
    """DTO for a Conley-Taber test on a panel file."""
    input: Path = Field(..., description="Panel CSV")
    treated: str = Field(..., description="Treated cluster id")
    post_from: int = Field(..., description="First post-period time")
    alpha: float = Field(..., gt=0, lt=1, description="Significance level")


class CTReportDTO(ReportDTO):
    reject: bool
    alpha: float
    delta_hat: float
    critical_value: float
    q: int
    
    @classmethod
    def from_result(cls, result: CTResult) -> "CTReportDTO":
        return cls(reject=result.reject, alpha=result.alpha, delta_hat=result.delta_hat,
                   critical_value=result.critical_value, q=result.q)
    
    def summary(self) -> str:
        verdict = "rejected" if self.reject else "not rejected"
        return (f"H0: effect = 0 {verdict} at alpha={self.alpha:g} "
                f"(delta_hat={self.delta_hat:.6f}, critical value={self.critical_value:.6f}, q={self.q})")
