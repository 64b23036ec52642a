# src/rearrangement/infrastructure/repositories/csv_estimate_repository.py
"""CSV implementation of EstimateRepository."""

from pathlib import Path

import pandas as pd
import structlog

from src.rearrangement.domain.repositories.estimate_repository import EstimateRepository
from src.rearrangement.domain.value_objects.estimate_vector import EstimateVector
from src.shared.domain.exceptions.base import NotFoundException, ValidationException

logger = structlog.get_logger()

COLUMNS = ["cluster", "estimate", "treated"]


def read_estimates_csv(path: Path) -> EstimateVector:
    """`cluster,estimate,treated` rows with exactly one ``treated=1`` row.

    Controls are ordered by cluster label.
    """
    frame = pd.read_csv(path, dtype={"cluster": str}, keep_default_na=False)
    if list(frame.columns) != COLUMNS:
        raise ValidationException(
            f"estimate file {path} must have header {','.join(COLUMNS)}, got {','.join(frame.columns)}"
        )
    
    try:
        estimates = pd.to_numeric(frame["estimate"]).astype(float)
        treated = pd.to_numeric(frame["treated"]).astype(int)
    except (ValueError, TypeError) as e:
        raise ValidationException(f"non-numeric estimate or treated flag in {path}") from e
    if not treated.isin([0, 1]).all():
        raise ValidationException(f"treated must be 0 or 1 in {path}")
    if frame["cluster"].duplicated().any():
        dupes = sorted(frame.loc[frame["cluster"].duplicated(), "cluster"].unique())
        raise ValidationException(f"duplicate clusters in {path}: {', '.join(dupes)}")
    
    n_treated = int(treated.sum())
    if n_treated != 1:
        raise ValidationException(f"{path} must mark exactly one treated cluster, found {n_treated}")
    
    is_treated = treated == 1
    controls = frame.loc[~is_treated].assign(estimate=estimates[~is_treated]).sort_values("cluster", kind="mergesort")
    return EstimateVector(
        treated=float(estimates[is_treated].iloc[0]),
        controls=controls["estimate"].tolist(),
        labels=controls["cluster"].tolist(),
        treated_label=str(frame.loc[is_treated, "cluster"].iloc[0]),
    )


class CsvEstimateRepository(EstimateRepository):
    """Estimates stored as `cluster,estimate,treated` text."""
    
    def __init__(self, path: Path | str):
        self.path = Path(path).expanduser()
    
    def load(self) -> EstimateVector:
        if not self.path.is_file():
            raise NotFoundException(f"estimate file not found: {self.path}")
        x = read_estimates_csv(self.path)
        logger.debug("Estimates loaded", path=str(self.path), q=x.q)
        return x
