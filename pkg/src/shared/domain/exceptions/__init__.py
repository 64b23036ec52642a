from src.shared.domain.exceptions.base import (
    BusinessRuleException,
    DomainException,
    InfeasibleWeightException,
    NotFoundException,
    NumericalException,
    ValidationException,
)

__all__ = [
    "BusinessRuleException",
    "DomainException",
    "InfeasibleWeightException",
    "NotFoundException",
    "NumericalException",
    "ValidationException",
]
