from src.rearrangement.application.dto.test_dto import (
    EstimateInputDTO,
    RobustnessReportDTO,
    RobustnessRequestDTO,
    TestReportDTO,
    TestRequestDTO,
)

__all__ = [
    "EstimateInputDTO",
    "RobustnessReportDTO",
    "RobustnessRequestDTO",
    "TestReportDTO",
    "TestRequestDTO",
]
