# src/weights/application/services/weight_application_service.py
"""Weight application service."""

from concurrent.futures import ProcessPoolExecutor
from itertools import product
from typing import Iterable

import structlog

from src.weights.domain.entities.weight_table import WeightTable
from src.weights.domain.repositories.weight_table_repository import WeightTableRepository
from src.weights.domain.services.weight_solver import compute_row
from src.weights.domain.value_objects.weight_spec import WeightSpec

logger = structlog.get_logger()


def generate_table(
    alphas: Iterable[float],
    rhos: Iterable[float],
    qs: Iterable[int],
    workers: int = 1,
) -> WeightTable:
    """One row per (alpha, rho, q) triple; independent of input order."""
    specs = sorted(
        {WeightSpec(a, r, q) for a, r, q in product(alphas, rhos, qs)},
        key=lambda s: s.sort_key,
    )
    logger.info("Generating weight table", cells=len(specs), workers=workers)
    
    if workers > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(compute_row, specs, chunksize=max(1, len(specs) // (4 * workers))))
    else:
        rows = [compute_row(spec) for spec in specs]
    
    return WeightTable(rows)


def lookup(table: WeightTable, spec: WeightSpec) -> float | None:
    """Stored weight for ``spec``, computed on a miss."""
    row = table.get(spec)
    if row is not None:
        return row.weight
    return compute_row(spec).weight


class WeightApplicationService:
    """Weight lookups backed by a persistent cache."""
    
    def __init__(self, repository: WeightTableRepository, workers: int = 1):
        self.repository = repository
        self.workers = workers
    
    def generate(self, alphas, rhos, qs) -> WeightTable:
        """Generate a table and merge it into the cache."""
        table = generate_table(alphas, rhos, qs, workers=self.workers)
        try:
            self.repository.save(self.repository.load().merge(table))
        except Exception as e:
            logger.error("Weight cache update failed", error=str(e))
            raise
        return table
    
    def weight_for(self, spec: WeightSpec) -> float | None:
        """Cached weight, computing and appending on a miss."""
        table = self.repository.load()
        row = table.get(spec)
        if row is not None:
            return row.weight
        
        row = compute_row(spec)
        try:
            # rows other runs saved while this one was computing are kept
            self.repository.save(self.repository.load().merge(WeightTable([row])))
        except OSError as e:
            # an unwritable cache must not block the computation itself
            logger.warning("Weight cache not updated", error=str(e))
        logger.info("Weight computed on demand", alpha=spec.alpha, rho=spec.rho, q=spec.q, weight=row.weight)
        # same precision as a cache hit
        return None if row.weight is None else round(row.weight, 6)
