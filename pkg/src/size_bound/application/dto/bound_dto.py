# src/size_bound/application/dto/bound_dto.py
"""Size bound DTOs."""

from pydantic import Field, field_validator, model_validator

from src.shared.application.dto.base import ReportDTO, RequestDTO
from src.shared.application.dto.grid import parse_grid
from src.size_bound.domain.value_objects.bound_components import BoundComponents


class BoundRequestDTO(RequestDTO):
    """DTO for xi_q at one weight or along a weight grid."""
    q: int = Field(..., ge=3, description="Number of control clusters")
    rho: float = Field(..., gt=0, description="Maximal heterogeneity")
    w: float | None = Field(default=None, gt=0, lt=1, description="Weight")
    curve: list[float] = Field(default_factory=list, description="Weight grid")
    
    @field_validator("curve", mode="before")
    @classmethod
    def expand_grid(cls, v):
        return [] if v is None else parse_grid(v)
    
    @field_validator("curve")
    @classmethod
    def validate_curve(cls, v):
        if any(not 0 < w < 1 for w in v):
            raise ValueError("curve weights must lie in (0, 1)")
        return v
    
    @model_validator(mode="after")
    def require_weight(self):
        if self.w is None and not self.curve:
            raise ValueError("give --w or --curve")
        return self


class BoundReportDTO(ReportDTO):
    q: int
    w: float
    rho: float
    escape_term: float
    oracle_integral: float
    centering_adjustment: float
    total: float
    
    @classmethod
    def from_components(cls, c: BoundComponents) -> "BoundReportDTO":
        return cls(q=c.q, w=c.w, rho=c.rho, escape_term=c.escape_term, oracle_integral=c.oracle_integral,
                   centering_adjustment=c.centering_adjustment, total=c.total)
    
    def summary(self) -> str:
        return f"xi_{self.q}(w={self.w:g}, rho={self.rho:g}) = {self.total:.6f}"


class BoundCurveReportDTO(ReportDTO):
    q: int
    rho: float
    points: int
    min_total: float
    out: str | None = None
    lines: list[str] = Field(default_factory=list, exclude=True)
    
    @classmethod
    def from_curve(cls, q: int, rho: float, curve: list[BoundComponents], out: str | None) -> "BoundCurveReportDTO":
        lines = [f"w={c.w:.6f} total={c.total:.6f}" for c in curve]
        return cls(q=q, rho=rho, points=len(curve), min_total=min(c.total for c in curve), out=out, lines=lines)
    
    def summary(self) -> str:
        where = f"; written to {self.out}" if self.out else ""
        return "\n".join([*self.lines, f"{self.points} points of xi_{self.q}(., rho={self.rho:g}){where}"])
