from src.conley_taber.application.dto.ct_dto import CTReportDTO, CTRequestDTO

__all__ = ["CTReportDTO", "CTRequestDTO"]
