# src/weights/domain/entities/weight_table.py
"""Weight table aggregate."""

from typing import Iterable, Iterator

from src.weights.domain.value_objects.weight_row import WeightRow
from src.weights.domain.value_objects.weight_spec import WeightSpec


class WeightTable:
    """Rows keyed by their spec; iteration is always in canonical order."""
    
    def __init__(self, rows: Iterable[WeightRow] = ()):
        self._rows: dict[WeightSpec, WeightRow] = {}
        for row in rows:
            self.add(row)
    
    def add(self, row: WeightRow) -> None:
        """Insert or replace the row for ``row.spec``."""
        self._rows[row.spec] = row
    
    def get(self, spec: WeightSpec) -> WeightRow | None:
        """Exact-match row, if stored."""
        return self._rows.get(spec)
    
    def merge(self, other: "WeightTable") -> "WeightTable":
        """New table with ``other``'s rows overriding this one's."""
        return WeightTable([*self, *other])
    
    @property
    def rows(self) -> list[WeightRow]:
        return sorted(self._rows.values(), key=lambda r: r.spec.sort_key)
    
    def __iter__(self) -> Iterator[WeightRow]:
        return iter(self.rows)
    
    def __len__(self) -> int:
        return len(self._rows)
    
    def __contains__(self, spec: object) -> bool:
        return spec in self._rows
    
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightTable):
            return False
        return self.rows == other.rows
    
    def __repr__(self) -> str:
        return f"WeightTable(rows={len(self)})"
