from src.rearrangement.application.services.rearrangement_application_service import (
    RearrangementApplicationService,
    load_estimate_vector,
)

__all__ = ["RearrangementApplicationService", "load_estimate_vector"]
