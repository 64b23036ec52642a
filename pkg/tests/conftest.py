from pathlib import Path

import pytest

from src.config import get_settings

FIXTURES = Path(__file__).parent / "fixtures"


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running numerical or Monte Carlo check")


@pytest.fixture()
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture()
def weight_cache(tmp_path, monkeypatch) -> Path:
    """Isolated weight cache picked up through REARRANGE_CACHE."""
    path = tmp_path / "cache" / "weights.csv"
    monkeypatch.setenv("REARRANGE_CACHE", str(path))
    get_settings.cache_clear()
    yield path
    get_settings.cache_clear()


@pytest.fixture()
def fixed_weight():
    """Weight provider returning one weight for every cell."""
    def make(w: float | None):
        return lambda spec: w
    return make
