from src.rearrangement.domain.services.decision import (
    reject_upper,
    reject_upper_batch,
    resolve_weight,
    run_test,
)
from src.rearrangement.domain.services.power import power_lower_bound
from src.rearrangement.domain.services.robustness import RobustnessResult, robustness_rho
from src.rearrangement.domain.services.statistic import (
    build_s,
    exact_phi,
    permutation_critical_value,
    rearrange_desc,
    t_stat,
)
from src.rearrangement.domain.services.worst_case import worst_case_draws

__all__ = [
    "RobustnessResult",
    "build_s",
    "exact_phi",
    "permutation_critical_value",
    "power_lower_bound",
    "rearrange_desc",
    "reject_upper",
    "reject_upper_batch",
    "resolve_weight",
    "robustness_rho",
    "run_test",
    "t_stat",
    "worst_case_draws",
]
