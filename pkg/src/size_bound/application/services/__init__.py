from src.size_bound.application.services.bound_application_service import BoundApplicationService

__all__ = ["BoundApplicationService"]
