# src/rearrangement/application/services/rearrangement_application_service.py
"""Rearrangement application service."""

import pandas as pd
import structlog

from src.estimators.domain.services.cluster_estimates import (
    cluster_treatment_estimates,
    did_cluster_estimates,
)
from src.estimators.infrastructure.repositories.csv_clustered_data_repository import (
    CsvClusteredDataRepository,
)
from src.rearrangement.application.dto.test_dto import (
    EstimateInputDTO,
    RobustnessReportDTO,
    RobustnessRequestDTO,
    TestReportDTO,
    TestRequestDTO,
)
from src.rearrangement.domain.services.decision import run_test
from src.rearrangement.domain.services.robustness import robustness_rho
from src.rearrangement.domain.value_objects.estimate_vector import EstimateVector
from src.rearrangement.infrastructure.repositories.csv_estimate_repository import (
    COLUMNS as ESTIMATE_COLUMNS,
    CsvEstimateRepository,
)
from src.shared.domain.exceptions.base import NotFoundException, ValidationException
from src.weights.application.services.weight_application_service import WeightApplicationService

logger = structlog.get_logger()


def load_estimate_vector(dto: EstimateInputDTO) -> EstimateVector:
    """Estimates read directly, or fitted per cluster from a panel or cross section.

    The file header decides: `cluster,estimate,treated` is an estimates
    file, a `time` column marks a panel.
    """
    if not dto.input.expanduser().is_file():
        raise NotFoundException(f"input file not found: {dto.input}")
    header = list(pd.read_csv(dto.input.expanduser(), nrows=0).columns)
    
    if header == ESTIMATE_COLUMNS:
        return CsvEstimateRepository(dto.input).load()
    
    if dto.treated is None:
        raise ValidationException("--treated is required for panel or cross-section input")
    source = CsvClusteredDataRepository(dto.input)
    if "time" in header:
        if dto.post_from is None:
            raise ValidationException("--post-from is required for panel input")
        x = did_cluster_estimates(source.load_panel(dto.treated, dto.post_from), dto.unit_effects)
    else:
        x = cluster_treatment_estimates(source.load_cross_section(dto.treated))
    logger.info("Cluster estimates computed", q=x.q, treated=x.treated, control_mean=x.control_mean)
    return x


class RearrangementApplicationService:
    """Tests and robustness scans with cache-backed weights."""
    
    def __init__(self, weight_service: WeightApplicationService):
        self.weight_service = weight_service
    
    def test(self, dto: TestRequestDTO) -> TestReportDTO:
        x = load_estimate_vector(dto)
        decision = run_test(x, dto.alpha, dto.rho, dto.direction, dto.shift,
                            weight_of=self.weight_service.weight_for)
        return TestReportDTO.from_decision(decision, x.q)
    
    def robustness(self, dto: RobustnessRequestDTO) -> RobustnessReportDTO:
        x = load_estimate_vector(dto)
        result = robustness_rho(x, dto.alpha, dto.direction, rho_max=dto.rho_max, step=dto.step,
                                shift=dto.shift, weight_of=self.weight_service.weight_for)
        return RobustnessReportDTO.from_result(result, dto.alpha, dto.direction)
