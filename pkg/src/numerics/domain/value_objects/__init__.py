from src.numerics.domain.value_objects.tolerance import ScalarResult, Tolerance

__all__ = ["ScalarResult", "Tolerance"]
