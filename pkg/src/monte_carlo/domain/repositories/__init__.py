from src.monte_carlo.domain.repositories.sim_result_repository import SimResultRepository

__all__ = ["SimResultRepository"]
