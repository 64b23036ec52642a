# src/size_bound/application/services/bound_application_service.py
"""Size bound application service."""

from src.size_bound.application.dto.bound_dto import BoundCurveReportDTO, BoundReportDTO, BoundRequestDTO
from src.size_bound.domain.services.size_bound import bound_curve, size_bound
from src.size_bound.infrastructure.repositories.csv_bound_curve_writer import write_curve_csv


class BoundApplicationService:
    
    def evaluate(self, dto: BoundRequestDTO) -> BoundReportDTO | BoundCurveReportDTO:
        if not dto.curve:
            return BoundReportDTO.from_components(size_bound(dto.q, dto.w, dto.rho))
        
        curve = bound_curve(dto.q, dto.rho, dto.curve)
        if dto.out is not None:
            write_curve_csv(curve, dto.out)
        return BoundCurveReportDTO.from_curve(dto.q, dto.rho, curve, None if dto.out is None else str(dto.out))
