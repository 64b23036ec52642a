# src/weights/application/dto/weight_dto.py
"""Weight DTOs."""

from pydantic import Field, field_validator, model_validator

from src.shared.application.dto.base import ReportDTO, RequestDTO
from src.shared.application.dto.grid import parse_grid, parse_int_grid

PUBLISHED_ALPHAS = (0.10, 0.05, 0.025, 0.01, 0.005)
PUBLISHED_RHOS = (2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0)
PUBLISHED_QS = (10, 15, 20, 25, 30, 35, 40, 45, 49)


class WeightsRequestDTO(RequestDTO):
    """DTO for generating a weight table."""
    alphas: list[float] = Field(default_factory=list, description="Significance levels")
    rhos: list[float] = Field(default_factory=list, description="Maximal heterogeneity values")
    qs: list[int] = Field(default_factory=list, description="Numbers of control clusters")
    published_grid: bool = Field(default=False, description="Use the published grid")
    
    @field_validator("alphas", "rhos", mode="before")
    @classmethod
    def expand_float_grid(cls, v):
        return [] if v is None else parse_grid(v)
    
    @field_validator("qs", mode="before")
    @classmethod
    def expand_int_grid(cls, v):
        return [] if v is None else parse_int_grid(v)
    
    @field_validator("alphas")
    @classmethod
    def validate_alphas(cls, v):
        bad = [a for a in v if not 0.0 < a < 0.5]
        if bad:
            raise ValueError(f"alpha must lie in (0, 0.5), got {bad}")
        return v
    
    @field_validator("rhos")
    @classmethod
    def validate_rhos(cls, v):
        if any(r <= 0 for r in v):
            raise ValueError("rho must be positive")
        return v
    
    @field_validator("qs")
    @classmethod
    def validate_qs(cls, v):
        if any(q < 3 for q in v):
            raise ValueError("q must be at least 3")
        return v
    
    @model_validator(mode="before")
    @classmethod
    def fill_published_grid(cls, data):
        if isinstance(data, dict) and data.get("published_grid"):
            data = dict(data)
            for key, default in (("alphas", PUBLISHED_ALPHAS), ("rhos", PUBLISHED_RHOS), ("qs", PUBLISHED_QS)):
                if not data.get(key):
                    data[key] = list(default)
        return data
    
    @model_validator(mode="after")
    def require_grids(self):
        if not (self.alphas and self.rhos and self.qs):
            raise ValueError("alpha, rho and q grids must all be non-empty (or use --published-grid)")
        return self


class WeightsReportDTO(ReportDTO):
    """Result of a weights run."""
    rows: int
    feasible: int
    infeasible: int
    out: str | None = None
    
    def summary(self) -> str:
        where = f", written to {self.out}" if self.out else ""
        return f"{self.rows} weight cells ({self.feasible} feasible, {self.infeasible} infeasible){where}"
