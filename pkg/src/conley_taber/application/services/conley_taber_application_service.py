# src/conley_taber/application/services/conley_taber_application_service.py
"""Conley-Taber application service."""

from src.conley_taber.application.dto.ct_dto import CTReportDTO, CTRequestDTO
from src.conley_taber.domain.services.conley_taber import conley_taber_test
from src.estimators.domain.repositories.clustered_data_repository import ClusteredDataRepository


class ConleyTaberApplicationService:
    
    def __init__(self, repository: ClusteredDataRepository):
        self.repository = repository
    
    def test(self, dto: CTRequestDTO) -> CTReportDTO:
        panel = self.repository.load_panel(dto.treated, dto.post_from)
        return CTReportDTO.from_result(conley_taber_test(panel, dto.alpha))
