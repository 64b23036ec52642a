# src/monte_carlo/infrastructure/repositories/csv_sim_result_repository.py
"""CSV implementation of SimResultRepository."""

from pathlib import Path
from typing import Sequence

import pandas as pd
import structlog

from src.monte_carlo.domain.repositories.sim_result_repository import SimResultRepository
from src.monte_carlo.domain.value_objects.sim_result import SimResult
from src.shared.infrastructure.files.atomic import write_frame_csv
from src.weights.infrastructure.repositories.csv_weight_table_repository import format_param

logger = structlog.get_logger()

COLUMNS = [
    "method", "q", "gamma", "sigma", "delta", "innovation", "alpha", "rho",
    "replications", "reject_rate", "mc_se", "master_seed",
]


def results_to_frame(results: Sequence[SimResult]) -> pd.DataFrame:
    records = [
        {
            "method": r.method.name,
            "q": str(r.cfg.q),
            "gamma": format_param(r.cfg.gamma),
            "sigma": format_param(r.cfg.sigma_treated),
            "delta": format_param(r.cfg.delta),
            "innovation": r.cfg.innovation.value,
            "alpha": format_param(r.method.alpha),
            "rho": "" if r.method.rho is None else format_param(r.method.rho),
            "replications": str(r.replications),
            "reject_rate": f"{r.reject_rate:.6f}",
            "mc_se": f"{r.mc_standard_error:.6f}",
            "master_seed": str(r.master_seed),
        }
        for r in results
    ]
    return pd.DataFrame.from_records(records, columns=COLUMNS)


class CsvSimResultRepository(SimResultRepository):
    """Results stored one row per cell and method."""
    
    def __init__(self, path: Path | str):
        self.path = Path(path).expanduser()
    
    def save(self, results: Sequence[SimResult]) -> None:
        write_frame_csv(results_to_frame(results), self.path)
        logger.info("Simulation results saved", path=str(self.path), rows=len(results))
