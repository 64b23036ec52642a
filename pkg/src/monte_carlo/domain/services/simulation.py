# src/monte_carlo/domain/services/simulation.py
"""Seeded draws from the cluster by time process."""

import math
from typing import Iterable

import numpy as np
import pandas as pd
from scipy import linalg, signal

from src.estimators.domain.entities.clustered_data import PanelData
from src.monte_carlo.domain.value_objects.dgp_config import DgpConfig, Innovation
from src.rearrangement.domain.value_objects.power_bound_input import PowerBoundInput

BURN_IN = 100


def replication_seed(master_seed: int, cell_index: int, replication: int) -> np.random.SeedSequence:
    """Seed of one replication; fixed for reproducibility."""
    return np.random.SeedSequence(entropy=master_seed, spawn_key=(cell_index, replication))


def simulate_errors(cfg: DgpConfig, rng: np.random.Generator) -> np.ndarray:
    """Stationary AR(1) errors, shape (periods, q+1)."""
    shape = (cfg.periods, cfg.q + 1)
    ar = [1.0, -cfg.gamma]
    if cfg.innovation is Innovation.GAUSSIAN:
        v = rng.standard_normal(shape) * cfg.scales
        v[0] /= math.sqrt(1.0 - cfg.gamma ** 2)
        return signal.lfilter([1.0], ar, v, axis=0)
    
    # (chi2_2 - 2) / 2 is Exp(1) - 1
    v = (rng.standard_exponential((BURN_IN + cfg.periods, cfg.q + 1)) - 1.0) * cfg.scales
    return signal.lfilter([1.0], ar, v, axis=0)[BURN_IN:]


def simulate_outcomes(cfg: DgpConfig, rng: np.random.Generator) -> np.ndarray:
    """Outcomes Y_tk, shape (periods, q+1), treated cluster last."""
    y = simulate_errors(cfg, rng)
    y += np.asarray(cfg.eta)[:, None] + np.asarray(cfg.zeta)[None, :]
    y[cfg.post, -1] += cfg.delta
    return y


def simulate_batch(cfg: DgpConfig, seeds: Iterable[np.random.SeedSequence]) -> np.ndarray:
    """One draw per seed stacked to (n, periods, q+1)."""
    return np.stack([simulate_outcomes(cfg, np.random.default_rng(seed)) for seed in seeds])


def cluster_labels(q: int) -> list[str]:
    """Zero-padded labels so that text order is numeric order."""
    width = len(str(q + 1))
    return [str(k).zfill(width) for k in range(1, q + 2)]


def outcomes_to_panel(cfg: DgpConfig, outcomes: np.ndarray) -> PanelData:
    labels = cluster_labels(cfg.q)
    times = np.arange(1, cfg.periods + 1)
    frame = pd.DataFrame({
        "unit": np.tile(labels, cfg.periods),
        "cluster": np.tile(labels, cfg.periods),
        "time": np.repeat(times, cfg.q + 1),
        "outcome": outcomes.ravel(),
    })
    return PanelData(frame, labels[-1], cfg.first_post_time)


def simulate_panel(cfg: DgpConfig, seed: int | np.random.SeedSequence) -> PanelData:
    """Cluster by time panel; the treated cluster carries the largest label."""
    return outcomes_to_panel(cfg, simulate_outcomes(cfg, np.random.default_rng(seed)))


def did_scale(cfg: DgpConfig, scale: float = 1.0) -> float:
    """Standard deviation of post mean minus pre mean of a stationary AR(1) series."""
    post = cfg.post
    c = np.where(post, 1.0 / post.sum(), -1.0 / (~post).sum())
    autocov = scale ** 2 * cfg.gamma ** np.arange(cfg.periods) / (1.0 - cfg.gamma ** 2)
    return float(math.sqrt(c @ linalg.toeplitz(autocov) @ c))


def power_bound_input(cfg: DgpConfig, w: float) -> PowerBoundInput:
    """Effect and long-run scales of the per-cluster estimates under ``cfg``."""
    return PowerBoundInput(
        delta=cfg.delta,
        sigma_treated=did_scale(cfg, cfg.sigma_treated),
        sigma_controls=[did_scale(cfg)] * cfg.q,
        w=w,
    )
