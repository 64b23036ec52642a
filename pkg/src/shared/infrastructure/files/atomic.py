# src/shared/infrastructure/files/atomic.py
"""Whole-file writes that never leave a partial file behind."""

import os
import tempfile
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, TextIO

import pandas as pd


@contextmanager
def atomic_open(path: Path | str) -> Iterator[TextIO]:
    """Text handle on a temporary sibling of ``path``, renamed over it on success."""
    path = Path(path).expanduser()
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=path.parent)
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            yield fh
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def write_frame_csv(frame: pd.DataFrame, path: Path | str) -> None:
    with atomic_open(path) as fh:
        frame.to_csv(fh, index=False, lineterminator="\n")


def write_text(text: str, path: Path | str) -> None:
    with atomic_open(path) as fh:
        fh.write(text)
