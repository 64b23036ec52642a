# src/shared/domain/value_objects/base.py
"""Base value object class."""

from abc import ABC
from typing import Any


class ValueObject(ABC):
    """Base class for immutable value objects.

    Subclasses validate in ``__init__`` and store only hashable attributes
    (floats, ints, strings, tuples) so equality and hashing stay exact.
    """

    _frozen: bool = False

    def _freeze(self) -> None:
        """Reject further attribute assignment."""
        object.__setattr__(self, "_frozen", True)

    def __setattr__(self, name: str, value: Any) -> None:
        if self._frozen:
            raise AttributeError(f"{self.__class__.__name__} is immutable")
        object.__setattr__(self, name, value)

    def as_dict(self) -> dict[str, Any]:
        """Public attributes as a plain dict."""
        return {k: v for k, v in self.__dict__.items() if not k.startswith("_")}

    def __eq__(self, other: Any) -> bool:
        """Check equality based on all attributes."""
        if not isinstance(other, self.__class__):
            return False
        
        return self.as_dict() == other.as_dict()
    
    def __hash__(self) -> int:
        """Hash based on all attributes."""
        return hash(tuple(sorted(self.as_dict().items())))
    
    def __repr__(self) -> str:
        """String representation."""
        attrs = ", ".join(f"{k}={v!r}" for k, v in self.as_dict().items())
        return f"{self.__class__.__name__}({attrs})"
