from src.monte_carlo.application.services.monte_carlo_application_service import (
    MonteCarloApplicationService,
    build_methods,
)

__all__ = ["MonteCarloApplicationService", "build_methods"]
