# src/rearrangement/domain/services/statistic.py
"""S(X, w), the difference-of-means statistic T and the rearrangement."""

import math
from fractions import Fraction
from typing import Sequence

from src.rearrangement.domain.value_objects.estimate_vector import EstimateVector
from src.rearrangement.domain.value_objects.s_vector import SVector
from src.shared.domain.exceptions.base import ValidationException


def check_weight(w: float) -> None:
    """Raise unless w lies in the open unit interval."""
    if not 0.0 < w < 1.0:
        raise ValidationException(f"w must lie in (0, 1), got {w}")


def build_s(x: EstimateVector, w: float) -> SVector:
    """((1+w) D, (1-w) D, X_01 - mean, ..., X_0q - mean), D = X_1 - mean."""
    check_weight(w)
    mean = x.control_mean
    delta = x.treated - mean
    return SVector(((1 + w) * delta, (1 - w) * delta, *(c - mean for c in x.controls)))


def t_stat(s: SVector | Sequence[float]) -> float:
    """(s_1 + s_2)/2 minus the mean of the remaining entries."""
    entries = s.entries if isinstance(s, SVector) else tuple(s)
    if len(entries) < 4:
        raise ValidationException(f"T needs at least 4 entries, got {len(entries)}")
    rest = entries[2:]
    return (entries[0] + entries[1]) / 2 - math.fsum(rest) / len(rest)


def rearrange_desc(s: SVector) -> SVector:
    """Entries from largest to smallest; equal entries keep their order."""
    return SVector(sorted(s.entries, key=lambda e: -e))


def permutation_critical_value(s: SVector) -> float:
    """Second largest value of T over all permutations of S.

    T only depends on which two entries occupy the first slots, so the
    largest value pairs the two largest entries and the runner-up pairs
    the largest with the third largest.
    """
    ordered = rearrange_desc(s).entries
    runner_up = (ordered[0], ordered[2], ordered[1], *ordered[3:])
    return t_stat(runner_up)


def exact_phi(treated: Fraction | int, controls: Sequence[Fraction | int], w: float | Fraction) -> bool:
    """1{T(S) = T(S sorted descending)} in exact rational arithmetic."""
    w = Fraction(w)
    check_weight(float(w))
    controls = [Fraction(c) for c in controls]
    q = len(controls)
    mean = sum(controls, Fraction(0)) / q
    delta = Fraction(treated) - mean
    s = [(1 + w) * delta, (1 - w) * delta, *(c - mean for c in controls)]
    
    def t(v: list[Fraction]) -> Fraction:
        return (v[0] + v[1]) / 2 - sum(v[2:], Fraction(0)) / q
    
    return t(s) == t(sorted(s, reverse=True))
