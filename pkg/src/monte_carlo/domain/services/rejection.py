# src/monte_carlo/domain/services/rejection.py
"""Rejection frequencies over seeded replications."""

import math
from concurrent.futures import Executor, ProcessPoolExecutor
from itertools import product
from typing import Iterable, Sequence

import numpy as np
import structlog

from src.conley_taber.domain.services.conley_taber import conley_taber_batch
from src.estimators.domain.services.cluster_estimates import did_from_outcomes
from src.monte_carlo.domain.services.simulation import replication_seed, simulate_batch
from src.monte_carlo.domain.value_objects.dgp_config import DgpConfig, Innovation
from src.monte_carlo.domain.value_objects.method import ConleyTaberMethod, Method, RearrangementMethod
from src.monte_carlo.domain.value_objects.sim_result import RateEstimate, SimResult
from src.rearrangement.domain.services.decision import WeightProvider, reject_upper_batch, resolve_weight
from src.rearrangement.domain.services.worst_case import worst_case_draws
from src.rearrangement.domain.value_objects.direction import Direction
from src.rearrangement.domain.value_objects.power_bound_input import PowerBoundInput
from src.shared.domain.exceptions.base import ValidationException
from src.weights.domain.services.weight_solver import weight

logger = structlog.get_logger()

CHUNK = 500
MIN_REPLICATIONS = 100
DRAW_BLOCK = 100_000


def reject_batch(x: np.ndarray, w: float, direction: Direction) -> np.ndarray:
    """Rearrangement decisions for rows (treated, controls...)."""
    if direction is Direction.UPPER:
        return reject_upper_batch(x, w)
    if direction is Direction.LOWER:
        return reject_upper_batch(-x, w)
    return reject_upper_batch(x, w) | reject_upper_batch(-x, w)


def count_rejections(cfg: DgpConfig, method: Method, w: float | None,
                     master_seed: int, cell_index: int, start: int, stop: int) -> int:
    """Rejections in replications ``start`` to ``stop - 1`` of one cell."""
    outcomes = simulate_batch(cfg, (replication_seed(master_seed, cell_index, i) for i in range(start, stop)))
    if isinstance(method, ConleyTaberMethod):
        return int(conley_taber_batch(outcomes, cfg.post, method.alpha).sum())
    
    estimates = did_from_outcomes(outcomes, cfg.post)
    x = np.concatenate([estimates[:, -1:], estimates[:, :-1]], axis=1)
    return int(reject_batch(x, w, method.direction).sum())


def method_weight(method: Method, q: int, weight_of: WeightProvider = weight) -> float | None:
    """Weight of a rearrangement method; raises for infeasible cells."""
    if isinstance(method, RearrangementMethod):
        return resolve_weight(method.direction.level(method.alpha), method.rho, q, weight_of)
    return None


def _check_replications(replications: int) -> None:
    if replications < MIN_REPLICATIONS:
        raise ValidationException(f"need at least {MIN_REPLICATIONS} replications, got {replications}")


def rejection_rate(
    cfg: DgpConfig,
    method: Method,
    replications: int,
    master_seed: int,
    cell_index: int = 0,
    workers: int = 1,
    weight_of: WeightProvider = weight,
    executor: Executor | None = None,
    w: float | None = None,
) -> SimResult:
    """Share of replications in which ``method`` rejects.

    Replication i of cell ``cell_index`` always draws from the same seed, so
    results do not depend on ``workers`` and methods sharing a cell index
    see identical data.
    """
    _check_replications(replications)
    if w is None:
        w = method_weight(method, cfg.q, weight_of)
    
    bounds = [(s, min(s + CHUNK, replications)) for s in range(0, replications, CHUNK)]
    args = [(cfg, method, w, master_seed, cell_index, s, e) for s, e in bounds]
    if executor is not None:
        counts = list(executor.map(count_rejections, *zip(*args)))
    elif workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            counts = list(pool.map(count_rejections, *zip(*args)))
    else:
        counts = [count_rejections(*a) for a in args]
    
    result = SimResult(method, cfg, replications, sum(counts), master_seed)
    logger.info("Cell simulated", method=method.name, q=cfg.q, gamma=cfg.gamma, sigma=cfg.sigma_treated,
                delta=cfg.delta, reject_rate=result.reject_rate, replications=replications)
    return result


def grid_configs(
    qs: Iterable[int],
    gammas: Iterable[float],
    sigmas: Iterable[float],
    deltas: Iterable[float],
    innovations: Iterable[Innovation | str],
    periods: int = 10,
    post_periods: int = 4,
) -> list[DgpConfig]:
    """Data generating cells in canonical order: q, innovation, gamma, delta, sigma."""
    innovations = sorted({Innovation.parse(i) for i in innovations}, key=list(Innovation).index)
    return [
        DgpConfig(q=q, periods=periods, post_periods=post_periods, gamma=g,
                  sigma_treated=s, delta=d, innovation=i)
        for q, i, g, d, s in product(sorted(set(qs)), innovations, sorted(set(gammas)),
                                     sorted(set(deltas)), sorted(set(sigmas)))
    ]


def run_grid(
    qs: Iterable[int],
    gammas: Iterable[float],
    sigmas: Iterable[float],
    deltas: Iterable[float],
    innovations: Iterable[Innovation | str],
    methods: Sequence[Method],
    replications: int,
    master_seed: int,
    periods: int = 10,
    post_periods: int = 4,
    workers: int = 1,
    weight_of: WeightProvider = weight,
) -> list[SimResult]:
    """One SimResult per (cell, method); every method of a cell sees the same draws."""
    _check_replications(replications)
    configs = grid_configs(qs, gammas, sigmas, deltas, innovations, periods, post_periods)
    if not configs or not methods:
        raise ValidationException("simulation grid is empty")
    
    # infeasible weights fail before any simulation
    weights = {(m, q): method_weight(m, q, weight_of) for m in methods for q in {c.q for c in configs}}
    logger.info("Running simulation grid", cells=len(configs), methods=len(methods),
                replications=replications, master_seed=master_seed, workers=workers)
    
    def run(executor: Executor | None) -> list[SimResult]:
        return [
            rejection_rate(cfg, m, replications, master_seed, cell_index=i,
                           executor=executor, w=weights[(m, cfg.q)])
            for i, cfg in enumerate(configs)
            for m in methods
        ]
    
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return run(pool)
    return run(None)


def worst_case_rate(q: int, alpha: float, rho: float, replications: int, master_seed: int,
                    weight_of: WeightProvider = weight) -> RateEstimate:
    """Upper-test rejections under the least favourable null at w_q(alpha, rho)."""
    w = resolve_weight(alpha, rho, q, weight_of)
    rng = np.random.default_rng(master_seed)
    rejections = 0
    for start in range(0, replications, DRAW_BLOCK):
        n = min(DRAW_BLOCK, replications - start)
        rejections += int(reject_upper_batch(worst_case_draws(q, rho, n, rng), w).sum())
    return RateEstimate(rejections, replications)


def _normal_draws(inp: PowerBoundInput, n: int, rng: np.random.Generator) -> np.ndarray:
    scales = np.array([inp.sigma_treated, *inp.sigma_controls])
    x = rng.standard_normal((n, inp.q + 1)) * scales
    x[:, 0] += inp.delta
    return x


def local_power_rate(inp: PowerBoundInput, replications: int, master_seed: int) -> RateEstimate:
    """Upper-test power with X_1 ~ N(delta, sigma^2) and X_0k ~ N(0, sigma_k^2).

    This is the limit experiment of local alternatives delta / sqrt(n), the
    setting of ``power_lower_bound``.
    """
    rng = np.random.default_rng(master_seed)
    rejections = 0
    for start in range(0, replications, DRAW_BLOCK):
        n = min(DRAW_BLOCK, replications - start)
        rejections += int(reject_upper_batch(_normal_draws(inp, n, rng), inp.w).sum())
    return RateEstimate(rejections, replications)


def large_sample_rates(
    inp: PowerBoundInput,
    perturbation: Sequence[float],
    ns: Sequence[int] = (100, 1_000, 10_000),
    replications: int = 100_000,
    master_seed: int = 0,
) -> dict[float, RateEstimate]:
    """Rejection rates for X + n^(-1/2) U on shared draws of X, keyed by n.

    The key ``math.inf`` holds the unperturbed rate.
    """
    u = np.asarray(perturbation, dtype=float)
    if u.shape != (inp.q + 1,):
        raise ValidationException(f"perturbation needs {inp.q + 1} entries, got {u.size}")
    x = _normal_draws(inp, replications, np.random.default_rng(master_seed))
    rates = {
        float(n): RateEstimate(int(reject_upper_batch(x + u / math.sqrt(n), inp.w).sum()), replications)
        for n in ns
    }
    rates[math.inf] = RateEstimate(int(reject_upper_batch(x, inp.w).sum()), replications)
    return rates
