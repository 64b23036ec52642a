import numpy as np
import pytest

from src.shared.application.dto.grid import parse_grid, parse_int_grid
from src.shared.domain.exceptions.base import ValidationException
from src.size_bound.domain.services.size_bound import bound_curve, size_bound
from src.size_bound.domain.value_objects.tightness_grade import Grade, TightnessGrade
from src.weights.application.dto.weight_dto import PUBLISHED_QS, WeightsRequestDTO
from src.weights.application.services.weight_application_service import (
    WeightApplicationService,
    generate_table,
    lookup,
)
from src.weights.domain.entities.weight_table import WeightTable
from src.weights.domain.repositories.weight_table_repository import WeightTableRepository
from src.weights.domain.services.weight_solver import compute_row, solve_weight, weight
from src.weights.domain.value_objects.weight_row import WeightRow
from src.weights.domain.value_objects.weight_spec import WeightSpec
from src.weights.infrastructure.repositories.csv_weight_table_repository import (
    CsvWeightTableRepository,
    read_table_csv,
    write_table_csv,
)


@pytest.fixture()
def small_table():
    return WeightTable([
        WeightRow(WeightSpec(0.05, 2.0, 20), 0.502, TightnessGrade(Grade.NEAR_TIGHT)),
        WeightRow(WeightSpec(0.05, 2.0, 10), None, TightnessGrade(Grade.INFEASIBLE)),
        WeightRow(WeightSpec(0.10, 3.0, 15), 0.6098, TightnessGrade(Grade.NEAR_TIGHT)),
    ])


# === Value objects and table ===

@pytest.mark.parametrize("alpha, rho, q", [(0.5, 2.0, 10), (0.0, 2.0, 10), (0.05, 0.0, 10), (0.05, 2.0, 2)])
def test_weight_spec_validation(alpha, rho, q):
    with pytest.raises(ValidationException):
        WeightSpec(alpha, rho, q)


def test_weight_row_requires_weight_iff_feasible():
    spec = WeightSpec(0.05, 2.0, 20)
    with pytest.raises(ValidationException):
        WeightRow(spec, None, TightnessGrade(Grade.LOOSE))
    with pytest.raises(ValidationException):
        WeightRow(spec, 0.5, TightnessGrade(Grade.INFEASIBLE))


def test_table_iterates_in_canonical_order(small_table):
    specs = [(r.spec.alpha, r.spec.rho, r.spec.q) for r in small_table]
    assert specs == [(0.10, 3.0, 15), (0.05, 2.0, 10), (0.05, 2.0, 20)]


def test_table_merge_overrides(small_table):
    spec = WeightSpec(0.05, 2.0, 20)
    other = WeightTable([WeightRow(spec, 0.5, TightnessGrade(Grade.NEAR_TIGHT))])
    merged = small_table.merge(other)
    assert len(merged) == 3
    assert merged.get(spec).weight == 0.5
    assert small_table.get(spec).weight == 0.502


# === Solver ===

def test_published_weight_q20():
    assert solve_weight(0.05, 2.0, 20) == pytest.approx(0.5020, abs=5e-4)


def test_weight_solves_size_bound_equation():
    w = solve_weight(0.10, 3.0, 25)
    assert size_bound(25, w, 3.0).total == pytest.approx(0.10, abs=1e-5)


def test_infeasible_cell_has_no_weight():
    row = compute_row(WeightSpec(0.05, 2.0, 10))
    assert row.weight is None
    assert row.grade.grade is Grade.INFEASIBLE
    assert weight(WeightSpec(0.05, 2.0, 10)) is None


def test_loose_cell_keeps_its_weight():
    row = compute_row(WeightSpec(0.05, 2.0, 15))
    assert row.grade.grade is Grade.LOOSE
    assert row.weight == pytest.approx(0.5752, abs=5e-4)


def test_weight_increases_with_rho():
    assert solve_weight(0.05, 3.0, 30) > solve_weight(0.05, 2.0, 30)


def test_weight_nonincreasing_in_q():
    weights = [weight(WeightSpec(0.10, 3.0, q)) for q in (15, 20, 25, 30, 35)]
    assert None not in weights
    assert all(b <= a for a, b in zip(weights, weights[1:]))


@pytest.mark.slow
@pytest.mark.parametrize("alpha, rho, q", [(0.05, 2.0, 20), (0.10, 3.0, 25), (0.01, 9.0, 49)])
def test_no_smaller_weight_meets_alpha(alpha, rho, q):
    w_hat = solve_weight(alpha, rho, q)
    ws = np.arange(1, int(round((w_hat - 1e-3) / 1e-3)) + 1) * 1e-3
    totals = np.array([c.total for c in bound_curve(q, rho, ws)])
    assert np.all(totals > alpha)


@pytest.mark.slow
def test_weight_at_49_controls_against_published_cell():
    # the published .9042 is the q=50 value; q=49 itself stays within half a unit
    assert weight(WeightSpec(0.01, 9.0, 49)) == pytest.approx(0.9042, abs=5e-4)
    assert weight(WeightSpec(0.01, 9.0, 50)) == pytest.approx(0.9042, abs=5e-4)


def test_generate_table_ignores_input_order():
    a = generate_table([0.05], [3.0, 2.0], [25, 20])
    b = generate_table([0.05], [2.0, 3.0], [20, 25, 20])
    assert a == b
    assert len(a) == 4


# === CSV repository ===

def test_csv_round_trip_keeps_rows(tmp_path, small_table):
    path = tmp_path / "w.csv"
    write_table_csv(small_table, path)
    assert path.read_text().splitlines()[0] == "alpha,rho,q,weight,grade"
    assert "0.05,2,10,,infeasible" in path.read_text().splitlines()
    loaded = read_table_csv(path)
    assert [r.weight for r in loaded] == [0.6098, None, 0.502]
    assert [r.grade.grade for r in loaded] == [r.grade.grade for r in small_table]


def test_csv_rejects_wrong_header(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("alpha,rho,q,w\n0.05,2,20,0.5\n")
    with pytest.raises(ValidationException):
        read_table_csv(path)


def test_repository_missing_file_is_empty(tmp_path):
    repo = CsvWeightTableRepository(tmp_path / "none.csv")
    assert not repo.exists()
    assert len(repo.load()) == 0


def test_published_fixture_parses(fixtures_dir):
    table = read_table_csv(fixtures_dir / "published_weights.csv")
    assert len(table) == 360
    assert table.get(WeightSpec(0.05, 2.0, 20)).weight == 0.502


def test_lookup_prefers_stored_row(small_table):
    assert lookup(small_table, WeightSpec(0.10, 3.0, 15)) == 0.6098
    assert lookup(small_table, WeightSpec(0.05, 2.0, 10)) is None


def test_lookup_computes_missing_row(small_table):
    assert lookup(small_table, WeightSpec(0.05, 3.0, 20)) == pytest.approx(weight(WeightSpec(0.05, 3.0, 20)))
    assert WeightSpec(0.05, 3.0, 20) not in small_table


# === Application service ===

class FakeRepository(WeightTableRepository):
    def __init__(self, table=None, fail=False):
        self.table = table or WeightTable()
        self.saves = 0
        self.fail = fail
    
    def exists(self):
        return True
    
    def load(self):
        return WeightTable(self.table)
    
    def save(self, table):
        if self.fail:
            raise OSError("read-only")
        self.saves += 1
        self.table = WeightTable(table)


def test_weight_for_uses_cached_row(small_table):
    repo = FakeRepository(small_table)
    service = WeightApplicationService(repo)
    assert service.weight_for(WeightSpec(0.05, 2.0, 20)) == 0.502
    assert repo.saves == 0


def test_weight_for_computes_and_stores_on_miss():
    repo = FakeRepository()
    service = WeightApplicationService(repo)
    w = service.weight_for(WeightSpec(0.05, 2.0, 20))
    assert w == pytest.approx(0.5020, abs=5e-4)
    assert w == round(w, 6)
    assert repo.saves == 1
    assert WeightSpec(0.05, 2.0, 20) in repo.table


class RacingRepository(FakeRepository):
    """Another run stores ``other`` between the first and second load."""

    def __init__(self, other):
        super().__init__()
        self.other = other
        self.loads = 0

    def load(self):
        self.loads += 1
        if self.loads == 2:
            self.table.add(self.other)
        return super().load()


def test_weight_for_keeps_rows_saved_meanwhile():
    other = WeightRow(WeightSpec(0.10, 3.0, 15), 0.6098, TightnessGrade(Grade.NEAR_TIGHT))
    repo = RacingRepository(other)
    WeightApplicationService(repo).weight_for(WeightSpec(0.05, 2.0, 10))
    assert repo.saves == 1
    assert WeightSpec(0.05, 2.0, 10) in repo.table
    assert repo.table.get(WeightSpec(0.10, 3.0, 15)) == other


def test_weight_for_survives_unwritable_cache():
    service = WeightApplicationService(FakeRepository(fail=True))
    assert service.weight_for(WeightSpec(0.05, 2.0, 10)) is None


def test_generate_merges_into_cache(small_table):
    repo = FakeRepository(small_table)
    WeightApplicationService(repo).generate([0.05], [2.0], [25])
    assert len(repo.table) == 4


# === DTO and grids ===

@pytest.mark.parametrize(
    "text, expected",
    [
        ("2..9", [2, 3, 4, 5, 6, 7, 8, 9]),
        ("1..2:0.25", [1, 1.25, 1.5, 1.75, 2]),
        ("10,15,...,45,49", [10, 15, 20, 25, 30, 35, 40, 45, 49]),
        (".10,.05", [0.10, 0.05]),
        (0.05, [0.05]),
    ],
)
def test_parse_grid(text, expected):
    assert parse_grid(text) == pytest.approx(expected)


def test_parse_grid_has_no_rounding_drift():
    values = parse_grid("1..2.5:0.05")
    assert len(values) == 31
    assert values[-1] == 2.5


def test_parse_int_grid_rejects_fractions():
    with pytest.raises(ValueError):
        parse_int_grid("1.5")


def test_weights_request_published_grid_fills_missing():
    dto = WeightsRequestDTO(alphas=".05", published_grid=True)
    assert dto.alphas == [0.05]
    assert dto.qs == list(PUBLISHED_QS)
    assert len(dto.rhos) == 8


def test_weights_request_rejects_large_alpha():
    with pytest.raises(ValueError):
        WeightsRequestDTO(alphas=".6", rhos="2", qs="20")


def test_weights_request_requires_grids():
    with pytest.raises(ValueError):
        WeightsRequestDTO(alphas=".05")
