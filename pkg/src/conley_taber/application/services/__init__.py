from src.conley_taber.application.services.conley_taber_application_service import (
    ConleyTaberApplicationService,
)

__all__ = ["ConleyTaberApplicationService"]
