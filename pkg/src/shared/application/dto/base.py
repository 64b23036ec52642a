# src/shared/application/dto/base.py
"""Base DTO classes."""

from abc import ABC
from pathlib import Path

from pydantic import BaseModel, ConfigDict


class BaseDTO(BaseModel, ABC):
    """Base class for DTOs."""
    
    model_config = ConfigDict(
        from_attributes=True,
        validate_assignment=True,
        arbitrary_types_allowed=True,
        extra="forbid",
    )


class RequestDTO(BaseDTO):
    """Base class for validated command inputs."""
    out: Path | None = None


class ReportDTO(BaseDTO):
    """Base class for command results.

    ``key_values`` is the machine-readable part of a report; ``summary``
    the human-readable line printed after it.
    """

    def key_values(self) -> dict[str, str]:
        return {k: _format_value(v) for k, v in self.model_dump().items()}

    def summary(self) -> str:
        return ""


def _format_value(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return f"{value:.6f}"
    return str(value)
