from src.monte_carlo.application.dto.simulate_dto import METHODS, SimulateReportDTO, SimulateRequestDTO

__all__ = ["METHODS", "SimulateReportDTO", "SimulateRequestDTO"]
