# src/size_bound/infrastructure/repositories/csv_bound_curve_writer.py
"""Size bound curves as CSV."""

from pathlib import Path
from typing import Sequence

import pandas as pd

from src.shared.infrastructure.files.atomic import write_frame_csv
from src.size_bound.domain.value_objects.bound_components import BoundComponents

COLUMNS = ["q", "rho", "w", "escape_term", "oracle_integral", "centering_adjustment", "total"]


def write_curve_csv(curve: Sequence[BoundComponents], path: Path | str) -> None:
    frame = pd.DataFrame.from_records(
        [
            {
                "q": c.q,
                "rho": f"{c.rho:.12g}",
                "w": f"{c.w:.6f}",
                "escape_term": f"{c.escape_term:.10g}",
                "oracle_integral": f"{c.oracle_integral:.10f}",
                "centering_adjustment": f"{c.centering_adjustment:.10f}",
                "total": f"{c.total:.10f}",
            }
            for c in curve
        ],
        columns=COLUMNS,
    )
    write_frame_csv(frame, path)
