# src/shared/domain/exceptions/base.py
"""Base domain exceptions."""


class DomainException(Exception):
    """Base exception for domain layer."""
    
    def __init__(self, message: str, error_code: str | None = None):
        super().__init__(message)
        self.message = message
        self.error_code = error_code or self.__class__.__name__


class ValidationException(DomainException):
    """Exception for invalid inputs and domain violations."""
    pass


class BusinessRuleException(DomainException):
    """Exception for inputs the test cannot be applied to."""
    pass


class NotFoundException(DomainException):
    """Exception for missing files, clusters or table rows."""
    pass


class InfeasibleWeightException(DomainException):
    """No weight exists for the requested (alpha, rho, q) combination."""

    def __init__(self, alpha: float, rho: float, q: int):
        super().__init__(
            f"infeasible combination alpha={alpha:g}, rho={rho:g}, q={q}; see weight table"
        )
        self.alpha = alpha
        self.rho = rho
        self.q = q


class NumericalException(DomainException):
    """Quadrature or optimisation failed to reach its tolerance."""
    pass
