import functools

import numpy as np
import pytest
from scipy.stats import norm

from src.rearrangement.domain.services import power_lower_bound, robustness_rho, run_test
from src.rearrangement.domain.value_objects import Direction, EstimateVector, PowerBoundInput
from src.shared.domain.exceptions.base import InfeasibleWeightException, ValidationException
from src.weights.domain.services.weight_solver import weight


def increasing_weight(spec):
    """w = rho / (1 + rho): rejection iff delta / (1 + rho) > max recentered control."""
    return spec.rho / (1.0 + spec.rho)


@pytest.fixture()
def controls():
    # mean 0, largest recentered control 1
    return list(np.linspace(-1.0, 1.0, 16))


# === robustness_rho ===

def test_robustness_matches_closed_form(controls):
    # rejects iff rho < 3.25 on the feasible part of the grid
    x = EstimateVector(4.25, controls)
    result = robustness_rho(x, 0.05, step=0.1, rho_max=10.0, weight_of=increasing_weight)
    assert result.rho == pytest.approx(3.2)
    assert result.rho_squared == pytest.approx(10.24)
    assert not result.saturated


@functools.lru_cache(maxsize=None)
def cached_weight(spec):
    return weight(spec)


@pytest.mark.slow
@pytest.mark.parametrize("direction", [Direction.UPPER, Direction.TWO_SIDED, Direction.LOWER])
def test_robustness_equals_exhaustive_scan_with_real_weights(direction):
    rng = np.random.default_rng(1)
    x = EstimateVector(4.0, rng.standard_normal(16))
    step, rho_max = 0.1, 10.0
    result = robustness_rho(x, 0.05, direction, step=step, rho_max=rho_max, weight_of=cached_weight)

    decisions = []
    for k in range(1, int(round(rho_max / step)) + 1):
        rho = round(k * step, 12)
        try:
            decisions.append((rho, run_test(x, 0.05, rho, direction, weight_of=cached_weight).reject))
        except InfeasibleWeightException:
            pass
    rejecting = [rho for rho, reject in decisions if reject]
    # rejections form a prefix of the feasible grid
    assert [reject for _, reject in decisions] == sorted((reject for _, reject in decisions), reverse=True)
    assert result.rho == (max(rejecting) if rejecting else None)


def test_two_controls_have_no_weight():
    x = EstimateVector(5.0, [-1.0, 1.0])
    with pytest.raises(InfeasibleWeightException):
        run_test(x, 0.05, 2.0)
    result = robustness_rho(x, 0.05, step=0.5, rho_max=3.0)
    assert result.rho is None
    assert not result.saturated


def test_robustness_saturates(controls):
    x = EstimateVector(100.0, controls)
    result = robustness_rho(x, 0.05, step=0.5, rho_max=6.0, weight_of=increasing_weight)
    assert result.rho == 6.0
    assert result.saturated


def test_robustness_without_rejection_is_none(controls):
    x = EstimateVector(0.5, controls)
    result = robustness_rho(x, 0.05, step=0.5, rho_max=6.0, weight_of=increasing_weight)
    assert result.rho is None
    assert result.rho_squared is None


def test_rejection_set_is_down_set():
    rng = np.random.default_rng(3)
    for _ in range(20):
        x = EstimateVector(rng.uniform(1, 8), rng.standard_normal(16))
        decisions = []
        for k in range(1, 41):
            try:
                decisions.append(run_test(x, 0.05, k * 0.25, weight_of=increasing_weight).reject)
            except InfeasibleWeightException:
                decisions.append(False)
        first_false = decisions.index(False) if False in decisions else len(decisions)
        assert not any(decisions[first_false:])


def test_robustness_rejects_bad_step(controls):
    with pytest.raises(ValidationException):
        robustness_rho(EstimateVector(5.0, controls), 0.05, step=0.0)


def test_infeasible_cells_count_as_non_rejections(controls):
    def only_large_rho(spec):
        return None if spec.rho < 5 else increasing_weight(spec)
    
    x = EstimateVector(100.0, controls)
    result = robustness_rho(x, 0.05, step=0.5, rho_max=6.0, weight_of=only_large_rho)
    assert result.rho is None


# === power_lower_bound ===

def test_power_bound_large_effect():
    inp = PowerBoundInput(delta=50.0, sigma_treated=1.0, sigma_controls=[1.0] * 5, w=0.5)
    assert power_lower_bound(inp) >= 0.999


def test_power_bound_vanishes_as_weight_approaches_one():
    inp = PowerBoundInput(delta=3.0, sigma_treated=1.0, sigma_controls=[1.0] * 5, w=0.9999)
    assert power_lower_bound(inp) <= 1e-3


def test_power_bound_matches_grid_supremum():
    inp = PowerBoundInput(delta=2.0, sigma_treated=1.0, sigma_controls=[1.0] * 3, w=0.5)
    t = np.arange(1, 1_000_001) * 1e-5
    grid = 8 * norm.cdf(2.0 - 3.0 * t) * (norm.cdf(t) - 0.5) ** 3
    assert power_lower_bound(inp) == pytest.approx(grid.max(), rel=1e-6)


def test_power_bound_increases_with_effect():
    low = PowerBoundInput(delta=2.0, sigma_treated=1.0, sigma_controls=[1.0] * 10, w=0.4)
    high = PowerBoundInput(delta=4.0, sigma_treated=1.0, sigma_controls=[1.0] * 10, w=0.4)
    assert 0 < power_lower_bound(low) < power_lower_bound(high) <= 1


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(delta=0.0, sigma_treated=1.0, sigma_controls=[1.0], w=0.5),
        dict(delta=1.0, sigma_treated=0.0, sigma_controls=[1.0], w=0.5),
        dict(delta=1.0, sigma_treated=1.0, sigma_controls=[1.0, 0.0], w=0.5),
        dict(delta=1.0, sigma_treated=1.0, sigma_controls=[1.0], w=1.0),
    ],
)
def test_power_bound_input_validation(kwargs):
    with pytest.raises(ValidationException):
        PowerBoundInput(**kwargs)
