from src.size_bound.application.dto.bound_dto import BoundCurveReportDTO, BoundReportDTO, BoundRequestDTO

__all__ = ["BoundCurveReportDTO", "BoundReportDTO", "BoundRequestDTO"]
