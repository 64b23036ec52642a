from src.monte_carlo.domain.services.rejection import (
    count_rejections,
    grid_configs,
    large_sample_rates,
    local_power_rate,
    rejection_rate,
    run_grid,
    worst_case_rate,
)
from src.monte_carlo.domain.services.simulation import (
    did_scale,
    power_bound_input,
    replication_seed,
    simulate_batch,
    simulate_outcomes,
    simulate_panel,
)

__all__ = [
    "count_rejections",
    "did_scale",
    "power_bound_input",
    "grid_configs",
    "large_sample_rates",
    "local_power_rate",
    "rejection_rate",
    "replication_seed",
    "run_grid",
    "simulate_batch",
    "simulate_outcomes",
    "simulate_panel",
    "worst_case_rate",
]
