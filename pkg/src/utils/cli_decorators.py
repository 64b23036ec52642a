# src/utils/cli_decorators.py
"""Decorators shared by the command handlers."""

import argparse
import functools
import sys
from pathlib import Path
from typing import Callable

import structlog
from pydantic import ValidationError

from src.config import get_settings
from src.shared.application.dto.base import ReportDTO
from src.shared.domain.exceptions.base import (
    DomainException,
    InfeasibleWeightException,
    NotFoundException,
    ValidationException,
)
from src.shared.infrastructure.files.atomic import write_text
from src.weights.application.services.weight_application_service import WeightApplicationService
from src.weights.infrastructure.repositories.csv_weight_table_repository import CsvWeightTableRepository

logger = structlog.get_logger()

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_VALIDATION = 2
EXIT_INFEASIBLE = 3
EXIT_NOT_FOUND = 4
EXIT_INTERNAL = 70


class CliException(Exception):
    def __init__(self, exit_code: int, detail: str):
        self.exit_code = exit_code
        self.detail = detail
        super().__init__(detail)


def exit_code_for(error: DomainException) -> int:
    if isinstance(error, InfeasibleWeightException):
        return EXIT_INFEASIBLE
    if isinstance(error, ValidationException):
        return EXIT_VALIDATION
    if isinstance(error, NotFoundException):
        return EXIT_NOT_FOUND
    return EXIT_DOMAIN


def report_text(report: ReportDTO) -> str:
    """``key=value`` lines followed by the summary."""
    lines = [f"{k}={v}" for k, v in report.key_values().items()]
    summary = report.summary()
    if summary:
        lines.append(summary)
    return "\n".join(lines) + "\n"


def write_report(report: ReportDTO, path: Path) -> None:
    write_text("".join(f"{k}={v}\n" for k, v in report.key_values().items()), path)


def cli_handler(func: Callable) -> Callable:
    """Print the handler's report and turn failures into exit codes."""
    @functools.wraps(func)
    def wrapper(args: argparse.Namespace) -> int:
        try:
            report = func(args)
            sys.stdout.write(report_text(report))
            return EXIT_OK
        
        except CliException as e:
            print(f"error: {e.detail}", file=sys.stderr)
            return e.exit_code
        except DomainException as e:
            print(f"error: {e.message}", file=sys.stderr)
            return exit_code_for(e)
        except Exception as e:
            logger.error("Command failed", command=func.__name__, error=str(e), exc_info=True)
            print("error: internal error; see log", file=sys.stderr)
            return EXIT_INTERNAL
    
    return wrapper


def with_weight_service(func: Callable) -> Callable:
    """Inject a weight service backed by the configured cache."""
    @functools.wraps(func)
    def wrapper(args: argparse.Namespace, *a, **kwargs):
        settings = get_settings()
        workers = getattr(args, "workers", None) or settings.workers
        kwargs["weight_service"] = WeightApplicationService(CsvWeightTableRepository(settings.cache), workers)
        return func(args, *a, **kwargs)
    
    return wrapper


def validate_args(dto_class):
    """Build ``dto_class`` from the parsed flags it declares."""
    def decorator(func: Callable) -> Callable:
        @functools.wraps(func)
        def wrapper(args: argparse.Namespace, *a, **kwargs):
            values = {
                name: value
                for name, value in vars(args).items()
                if name in dto_class.model_fields and value is not None
            }
            try:
                kwargs["dto"] = dto_class(**values)
            except ValidationError as e:
                problems = "; ".join(
                    f"{'.'.join(str(p) for p in err['loc']) or 'arguments'}: {err['msg']}"
                    for err in e.errors()
                )
                raise CliException(EXIT_VALIDATION, f"invalid arguments: {problems}")
            return func(args, *a, **kwargs)
        
        return wrapper
    
    return decorator
