# src/estimators/domain/entities/clustered_data.py
"""Individual or aggregated observations grouped into clusters."""

import numpy as np
import pandas as pd

from src.shared.domain.exceptions.base import NotFoundException, ValidationException


class ClusteredData:
    """Rows of (unit, cluster, [time,] outcome, covariates...) with one treated cluster.

    Rows are stored in a canonical order so that estimates do not depend on
    the order in which they were supplied.
    """
    
    KEYS: tuple[str, ...] = ("unit", "cluster", "outcome")
    
    def __init__(self, frame: pd.DataFrame, treated_cluster: str):
        missing = [c for c in self.KEYS if c not in frame.columns]
        if missing:
            raise ValidationException(f"missing columns: {', '.join(missing)}")
        if frame.empty:
            raise ValidationException("no observations")
        
        # Validate and set covariates
        covariates = tuple(str(c) for c in frame.columns if c not in self.KEYS)
        frame = frame.loc[:, [*self.KEYS, *covariates]].copy()
        frame.columns = [*self.KEYS, *covariates]
        frame["unit"] = frame["unit"].astype(str)
        frame["cluster"] = frame["cluster"].astype(str)
        numeric = [c for c in frame.columns if c not in ("unit", "cluster")]
        try:
            frame[numeric] = frame[numeric].apply(pd.to_numeric)
        except (ValueError, TypeError) as e:
            raise ValidationException(f"non-numeric values: {e}") from e
        if not np.isfinite(frame[numeric].to_numpy(dtype=float)).all():
            raise ValidationException("outcomes and covariates must be finite")
        
        # Validate and set treated cluster
        treated_cluster = str(treated_cluster)
        if treated_cluster not in set(frame["cluster"]):
            raise NotFoundException(f"treated cluster {treated_cluster} not in data")
        
        self._covariates = covariates
        self._treated_cluster = treated_cluster
        self._frame = frame.sort_values(list(frame.columns), kind="mergesort").reset_index(drop=True)
        
        if len(self.clusters) < 3:
            raise ValidationException(f"need at least 2 control clusters, got {len(self.clusters) - 1}")
    
    @property
    def frame(self) -> pd.DataFrame:
        """Canonically ordered observations."""
        return self._frame
    
    @property
    def covariates(self) -> tuple[str, ...]:
        return self._covariates
    
    @property
    def treated_cluster(self) -> str:
        return self._treated_cluster
    
    @property
    def clusters(self) -> list[str]:
        """Cluster labels in sorted order."""
        return sorted(self._frame["cluster"].unique())
    
    @property
    def control_clusters(self) -> list[str]:
        return [c for c in self.clusters if c != self._treated_cluster]
    
    @property
    def q(self) -> int:
        """Number of control clusters."""
        return len(self.clusters) - 1
    
    def cluster_frame(self, cluster: str) -> pd.DataFrame:
        rows = self._frame[self._frame["cluster"] == cluster]
        if rows.empty:
            raise NotFoundException(f"cluster {cluster} not in data")
        return rows
    
    def __len__(self) -> int:
        return len(self._frame)
    
    def __repr__(self) -> str:
        return (f"{self.__class__.__name__}(rows={len(self)}, clusters={len(self.clusters)}, "
                f"treated={self._treated_cluster!r})")


class CrossSectionData(ClusteredData):
    """Cross section with a cluster-level treatment."""


class PanelData(ClusteredData):
    """Panel observed before and after ``first_post_time``."""
    
    KEYS = ("unit", "cluster", "time", "outcome")
    
    def __init__(self, frame: pd.DataFrame, treated_cluster: str, first_post_time: int):
        if "time" in frame.columns:
            times = pd.to_numeric(frame["time"], errors="coerce")
            if times.isna().any() or (times != times.round()).any():
                raise ValidationException("time must be integer")
            frame = frame.assign(time=times.astype(int))
        super().__init__(frame, treated_cluster)
        self._first_post_time = int(first_post_time)
        
        # Every cluster needs observations on both sides of the break
        post = self.post
        by_cluster = post.groupby(self._frame["cluster"]).agg(["min", "max"])
        lacking = by_cluster[by_cluster["min"] == by_cluster["max"]].index.tolist()
        if lacking:
            raise ValidationException(
                f"clusters lacking pre or post observations (first post time "
                f"{self._first_post_time}): {', '.join(lacking)}"
            )
    
    @property
    def first_post_time(self) -> int:
        return self._first_post_time
    
    @property
    def post(self) -> pd.Series:
        """Post-period indicator aligned with ``frame``."""
        return self._frame["time"] >= self._first_post_time
    
    def units_span_break(self) -> bool:
        """Whether every unit is observed both before and after the break."""
        spans = self.post.groupby(self._frame["unit"]).agg(["min", "max"])
        return bool((spans["min"] != spans["max"]).all())
    
    def cluster_time_means(self) -> "PanelData":
        """Cluster by time averages, one unit per cluster."""
        means = (
            self._frame.groupby(["cluster", "time"], sort=True)[["outcome", *self._covariates]]
            .mean()
            .reset_index()
        )
        means.insert(0, "unit", means["cluster"])
        return PanelData(means, self._treated_cluster, self._first_post_time)
    
    def __repr__(self) -> str:
        return (f"PanelData(rows={len(self)}, clusters={len(self.clusters)}, "
                f"treated={self._treated_cluster!r}, first_post_time={self._first_post_time})")
