# src/monte_carlo/application/services/monte_carlo_application_service.py
"""Simulation application service."""

from pathlib import Path

import structlog

from src.monte_carlo.application.dto.simulate_dto import SimulateReportDTO, SimulateRequestDTO
from src.monte_carlo.domain.services.rejection import run_grid
from src.monte_carlo.domain.value_objects.method import ConleyTaberMethod, Method, RearrangementMethod
from src.monte_carlo.infrastructure.repositories.csv_sim_result_repository import CsvSimResultRepository
from src.weights.application.services.weight_application_service import WeightApplicationService

logger = structlog.get_logger()


def build_methods(dto: SimulateRequestDTO) -> list[Method]:
    methods: list[Method] = []
    for name in dto.methods:
        if name == "rearrangement":
            methods.append(RearrangementMethod(dto.alpha, dto.rho, dto.direction))
        else:
            methods.append(ConleyTaberMethod(dto.alpha))
    return methods


class MonteCarloApplicationService:
    """Simulation grids with cache-backed weights."""
    
    def __init__(self, weight_service: WeightApplicationService, workers: int = 1):
        self.weight_service = weight_service
        self.workers = workers
    
    def simulate(self, dto: SimulateRequestDTO) -> SimulateReportDTO:
        results = run_grid(
            qs=dto.qs,
            gammas=dto.gammas,
            sigmas=dto.sigmas,
            deltas=dto.deltas,
            innovations=dto.innovations,
            methods=build_methods(dto),
            replications=dto.reps,
            master_seed=dto.seed,
            periods=dto.periods,
            post_periods=dto.post_periods,
            workers=self.workers,
            weight_of=self.weight_service.weight_for,
        )
        out = None
        if dto.out is not None:
            CsvSimResultRepository(dto.out).save(results)
            out = str(Path(dto.out))
        return SimulateReportDTO.from_results(results, dto.reps, dto.seed, out)
