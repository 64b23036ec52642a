from src.conley_taber.domain.value_objects.ct_result import CTResult, quantile_rank

__all__ = ["CTResult", "quantile_rank"]
