from src.monte_carlo.domain.value_objects.dgp_config import DgpConfig, Innovation
from src.monte_carlo.domain.value_objects.method import ConleyTaberMethod, Method, RearrangementMethod
from src.monte_carlo.domain.value_objects.sim_result import RateEstimate, SimResult, mc_standard_error

__all__ = [
    "ConleyTaberMethod",
    "DgpConfig",
    "Innovation",
    "Method",
    "RateEstimate",
    "RearrangementMethod",
    "SimResult",
    "mc_standard_error",
]
