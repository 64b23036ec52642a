from src.conley_taber.domain.services.conley_taber import (
    conley_taber_batch,
    conley_taber_test,
    two_way_demean,
)

__all__ = ["conley_taber_batch", "conley_taber_test", "two_way_demean"]
