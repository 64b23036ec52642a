from src.rearrangement.domain.repositories.estimate_repository import EstimateRepository

__all__ = ["EstimateRepository"]
