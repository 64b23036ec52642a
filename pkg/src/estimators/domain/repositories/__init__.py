from src.estimators.domain.repositories.clustered_data_repository import ClusteredDataRepository

__all__ = ["ClusteredDataRepository"]
