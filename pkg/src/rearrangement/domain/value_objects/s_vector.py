# src/rearrangement/domain/value_objects/s_vector.py
"""Recentered weighted vector S(X, w)."""

from typing import Sequence

from src.shared.domain.value_objects.base import ValueObject
from src.shared.domain.exceptions.base import ValidationException


class SVector(ValueObject):
    """Entries of S(X, w) or of any rearrangement of it."""
    
    def __init__(self, entries: Sequence[float]):
        entries = tuple(entries)
        if len(entries) < 4:
            raise ValidationException(f"S needs at least 4 entries, got {len(entries)}")
        self.entries = entries
        self._freeze()
    
    @property
    def q(self) -> int:
        return len(self.entries) - 2
    
    def __len__(self) -> int:
        return len(self.entries)
    
    def __getitem__(self, i: int) -> float:
        return self.entries[i]
    
    def __neg__(self) -> "SVector":
        return SVector(tuple(-e for e in self.entries))
