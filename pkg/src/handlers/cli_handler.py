# src/handlers/cli_handler.py
"""Command-line handlers."""

import argparse
import sys

import structlog

from src.config import get_settings
from src.conley_taber.application.dto.ct_dto import CTReportDTO, CTRequestDTO
from src.conley_taber.application.services.conley_taber_application_service import (
    ConleyTaberApplicationService,
)
from src.estimators.infrastructure.repositories.csv_clustered_data_repository import (
    CsvClusteredDataRepository,
)
from src.monte_carlo.application.dto.simulate_dto import SimulateReportDTO, SimulateRequestDTO
from src.monte_carlo.application.services.monte_carlo_application_service import (
    MonteCarloApplicationService,
)
from src.rearrangement.application.dto.test_dto import (
    RobustnessReportDTO,
    RobustnessRequestDTO,
    TestReportDTO,
    TestRequestDTO,
)
from src.rearrangement.application.services.rearrangement_application_service import (
    RearrangementApplicationService,
)
from src.shared.infrastructure.logging.setup import setup_logging
from src.size_bound.application.dto.bound_dto import BoundCurveReportDTO, BoundReportDTO, BoundRequestDTO
from src.size_bound.application.services.bound_application_service import BoundApplicationService
from src.utils.cli_decorators import cli_handler, validate_args, with_weight_service, write_report
from src.weights.application.dto.weight_dto import WeightsReportDTO, WeightsRequestDTO
from src.weights.application.services.weight_application_service import WeightApplicationService
from src.weights.infrastructure.repositories.csv_weight_table_repository import write_table_csv

logger = structlog.get_logger()


# === COMMAND HANDLERS ===

@cli_handler
@with_weight_service
@validate_args(WeightsRequestDTO)
def weights_handler(args, weight_service: WeightApplicationService, dto: WeightsRequestDTO) -> WeightsReportDTO:
    """Weight table over the alpha, rho and q grids."""
    table = weight_service.generate(dto.alphas, dto.rhos, dto.qs)
    if dto.out is not None:
        write_table_csv(table, dto.out)
    feasible = sum(1 for row in table if row.grade.feasible)
    return WeightsReportDTO(
        rows=len(table),
        feasible=feasible,
        infeasible=len(table) - feasible,
        out=None if dto.out is None else str(dto.out),
    )


@cli_handler
@validate_args(BoundRequestDTO)
def bound_handler(args, dto: BoundRequestDTO) -> BoundReportDTO | BoundCurveReportDTO:
    """Components of xi_q at one weight, or the curve over a weight grid."""
    report = BoundApplicationService().evaluate(dto)
    if dto.out is not None and isinstance(report, BoundReportDTO):
        write_report(report, dto.out)
    return report


@cli_handler
@with_weight_service
@validate_args(TestRequestDTO)
def test_handler(args, weight_service: WeightApplicationService, dto: TestRequestDTO) -> TestReportDTO:
    """Rearrangement test on estimates or on data estimated per cluster."""
    report = RearrangementApplicationService(weight_service).test(dto)
    if dto.out is not None:
        write_report(report, dto.out)
    return report


@cli_handler
@with_weight_service
@validate_args(RobustnessRequestDTO)
def robustness_handler(args, weight_service: WeightApplicationService,
                       dto: RobustnessRequestDTO) -> RobustnessReportDTO:
    """Largest rho at which the test still rejects."""
    report = RearrangementApplicationService(weight_service).robustness(dto)
    if report.saturated:
        logger.warning("Rejects up to rho-max; raise --rho-max for the full range", rho_max=dto.rho_max)
    if dto.out is not None:
        write_report(report, dto.out)
    return report


@cli_handler
@validate_args(CTRequestDTO)
def ct_test_handler(args, dto: CTRequestDTO) -> CTReportDTO:
    """Conley-Taber test on a panel file."""
    report = ConleyTaberApplicationService(CsvClusteredDataRepository(dto.input)).test(dto)
    if dto.out is not None:
        write_report(report, dto.out)
    return report


@cli_handler
@with_weight_service
@validate_args(SimulateRequestDTO)
def simulate_handler(args, weight_service: WeightApplicationService, dto: SimulateRequestDTO) -> SimulateReportDTO:
    """Rejection rates over a simulation grid."""
    return MonteCarloApplicationService(weight_service, weight_service.workers).simulate(dto)


# === ARGUMENT PARSING ===

def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--in", dest="input", required=True, help="estimates, panel or cross-section CSV")
    p.add_argument("--treated", help="treated cluster id (panel or cross-section input)")
    p.add_argument("--post-from", dest="post_from", type=int, help="first post-period time (panel input)")
    p.add_argument("--unit-effects", dest="unit_effects", choices=["auto", "on", "off"],
                   help="absorb unit fixed effects (default auto)")


def _add_direction(p: argparse.ArgumentParser) -> None:
    p.add_argument("--direction", choices=["upper", "lower", "two-sided"], help="alternative (default upper)")
    p.add_argument("--shift", type=float, help="effect under the null (default 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rearrange", description="Rearrangement inference with one treated cluster")
    parser.add_argument("--workers", type=int, help="worker processes (default REARRANGE_WORKERS or 1)")
    sub = parser.add_subparsers(dest="command", required=True)
    
    p = sub.add_parser("weights", help="weight table w_q(alpha, rho)")
    p.add_argument("--alpha", dest="alphas", help="levels, e.g. .05 or .10,.05")
    p.add_argument("--rho", dest="rhos", help="heterogeneity grid, e.g. 2..9")
    p.add_argument("--q", dest="qs", help="control cluster counts, e.g. 10,15,...,49")
    p.add_argument("--published-grid", dest="published_grid", action="store_true", default=None,
                   help="fill missing grids with the published table's")
    p.add_argument("--out", help="write the table to this CSV")
    p.set_defaults(handler=weights_handler)
    
    p = sub.add_parser("bound", help="size bound xi_q(w, rho)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--rho", type=float, required=True)
    p.add_argument("--w", type=float)
    p.add_argument("--curve", help="weight grid, e.g. 0.01..0.99:0.01")
    p.add_argument("--out")
    p.set_defaults(handler=bound_handler)
    
    p = sub.add_parser("test", help="rearrangement test")
    _add_input(p)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--rho", type=float, required=True)
    _add_direction(p)
    p.add_argument("--out")
    p.set_defaults(handler=test_handler)
    
    p = sub.add_parser("robustness", help="largest rho at which the test rejects")
    _add_input(p)
    p.add_argument("--alpha", type=float, required=True)
    _add_direction(p)
    p.add_argument("--rho-max", dest="rho_max", type=float, help="largest rho scanned (default 10)")
    p.add_argument("--step", type=float, help="rho grid step (default 0.001)")
    p.add_argument("--out")
    p.set_defaults(handler=robustness_handler)
    
    p = sub.add_parser("ct-test", help="Conley-Taber test")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--treated", required=True)
    p.add_argument("--post-from", dest="post_from", type=int, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--out")
    p.set_defaults(handler=ct_test_handler)
    
    p = sub.add_parser("simulate", help="rejection rates over a simulation grid")
    p.add_argument("--q", dest="qs")
    p.add_argument("--gamma", dest="gammas")
    p.add_argument("--sigma", dest="sigmas", help="treated scales, e.g. 1..2.5:0.05")
    p.add_argument("--delta", dest="deltas")
    p.add_argument("--innovation", dest="innovations", help="gaussian,centered_chi2_2")
    p.add_argument("--method", dest="methods", help="rearrangement,conley_taber")
    p.add_argument("--alpha", type=float)
    p.add_argument("--rho", type=float)
    p.add_argument("--direction", choices=["upper", "lower", "two-sided"])
    p.add_argument("--reps", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--periods", type=int)
    p.add_argument("--post-periods", dest="post_periods", type=int)
    p.add_argument("--out")
    p.set_defaults(handler=simulate_handler)
    
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    settings = get_settings()
    setup_logging(settings.log_level, settings.log_format)
    logger.debug("Command started", command=args.command)
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
