# src/monte_carlo/application/dto/simulate_dto.py
"""Simulation DTOs."""

from pydantic import Field, field_validator

from src.monte_carlo.domain.value_objects.dgp_config import Innovation
from src.monte_carlo.domain.value_objects.sim_result import SimResult
from src.rearrangement.domain.value_objects.direction import Direction
from src.shared.application.dto.base import ReportDTO, RequestDTO
from src.shared.application.dto.grid import parse_grid, parse_int_grid
from src.shared.domain.exceptions.base import DomainException

METHODS = ("rearrangement", "conley_taber")


def _names(v) -> list[str]:
    if isinstance(v, str):
        v = v.split(",")
    return [str(item).strip() for item in v if str(item).strip()]


class SimulateRequestDTO(RequestDTO):
    """DTO for a simulation grid."""
    qs: list[int] = Field(default_factory=lambda: [50], description="Numbers of control clusters")
    gammas: list[float] = Field(default_factory=lambda: [0.5], description="AR(1) coefficients")
    sigmas: list[float] = Field(default_factory=lambda: [1.0], description="Treated innovation scales")
    deltas: list[float] = Field(default_factory=lambda: [0.0], description="Treatment effects")
    innovations: list[Innovation] = Field(default_factory=lambda: [Innovation.GAUSSIAN])
    methods: list[str] = Field(default_factory=lambda: list(METHODS))
    alpha: float = Field(default=0.05, gt=0, lt=1)
    rho: float = Field(default=2.0, gt=0)
    direction: Direction = Field(default=Direction.UPPER)
    reps: int = Field(default=10_000, ge=100, description="Replications per cell")
    seed: int = Field(default=0, ge=0, description="Master seed")
    periods: int = Field(default=10, ge=2)
    post_periods: int = Field(default=4, ge=1)
    
    @field_validator("gammas", "sigmas", "deltas", mode="before")
    @classmethod
    def expand_float_grid(cls, v):
        return parse_grid(v)
    
    @field_validator("qs", mode="before")
    @classmethod
    def expand_int_grid(cls, v):
        return parse_int_grid(v)
    
    @field_validator("innovations", mode="before")
    @classmethod
    def parse_innovations(cls, v):
        try:
            return [Innovation.parse(name) for name in _names(v)]
        except DomainException as e:
            raise ValueError(e.message)
    
    @field_validator("methods", mode="before")
    @classmethod
    def parse_methods(cls, v):
        names = [name.lower().replace("-", "_") for name in _names(v)]
        unknown = [name for name in names if name not in METHODS]
        if unknown or not names:
            raise ValueError(f"methods must be among {', '.join(METHODS)}, got {v}")
        return list(dict.fromkeys(names))
    
    @field_validator("direction", mode="before")
    @classmethod
    def parse_direction(cls, v):
        try:
            return Direction.parse(v)
        except DomainException as e:
            raise ValueError(e.message)
    
    @field_validator("gammas")
    @classmethod
    def validate_gammas(cls, v):
        if any(not -1 < g < 1 for g in v):
            raise ValueError("gamma must lie in (-1, 1)")
        return v
    
    @field_validator("sigmas")
    @classmethod
    def validate_sigmas(cls, v):
        if any(s < 0 for s in v):
            raise ValueError("sigma must be non-negative")
        return v
    
    @field_validator("qs")
    @classmethod
    def validate_qs(cls, v):
        if any(q < 3 for q in v):
            raise ValueError("q must be at least 3")
        return v


class SimulateReportDTO(ReportDTO):
    """Simulation grid result."""
    cells: int
    replications: int
    seed: int
    out: str | None = None
    lines: list[str] = Field(default_factory=list, exclude=True)
    
    @classmethod
    def from_results(cls, results: list[SimResult], replications: int, seed: int,
                     out: str | None) -> "SimulateReportDTO":
        lines = [
            f"{r.method.name:<13} q={r.cfg.q:<3} gamma={r.cfg.gamma:<5g} sigma={r.cfg.sigma_treated:<5g} "
            f"delta={r.cfg.delta:<4g} {r.cfg.innovation.value:<15} "
            f"rate={r.reject_rate:.6f} se={r.mc_standard_error:.6f}"
            for r in results
        ]
        return cls(cells=len(results), replications=replications, seed=seed, out=out, lines=lines)
    
    def summary(self) -> str:
        where = f"; written to {self.out}" if self.out else ""
        return "\n".join([*self.lines, f"{self.cells} cells x {self.replications} replications{where}"])
