"""
Error handlers for the command line.

Each handler logs the failure, builds an ErrorReport and writes it to
stderr; the return value is the process exit code.
"""

import json
import sys
from typing import Optional, TextIO

from pydantic import ValidationError

from config import settings
from errors import EXIT_INVALID_INPUT, ToricError
from schemas.reports import ErrorReport
from utils.helpers import dump_report
from utils.logger import logger, log_exception


def _emit(report: ErrorReport, stream: TextIO) -> int:
    stream.write(dump_report(report, settings.output_format) + "\n")
    return report.exit_code


def toric_error_handler(exc: ToricError, stream: TextIO) -> int:
    """
    Handle engine errors.

    Args:
        exc: Engine exception with its category exit code
        stream: Destination of the diagnostic

    Returns:
        Exit code of the error category
    """
    logger.error(f"{type(exc).__name__}: {exc.message}")
    report = ErrorReport(exit_code=exc.exit_code, **exc.to_dict())
    return _emit(report, stream)


def validation_error_handler(exc: ValidationError, stream: TextIO) -> int:
    """
    Handle input files that do not match their schema.

    Args:
        exc: Pydantic validation error
        stream: Destination of the diagnostic

    Returns:
        Invalid-input exit code
    """
    logger.error(f"Validation Error: {exc.error_count()} problem(s)")
    errors = [
        {"location": ".".join(str(part) for part in err["loc"]), "message": err["msg"]}
        for err in exc.errors()
    ]
    report = ErrorReport(
        error="ValidationError",
        message=f"input does not match the {exc.title} schema",
        detail={"errors": errors},
        exit_code=EXIT_INVALID_INPUT,
    )
    return _emit(report, stream)


def file_error_handler(exc: Exception, stream: TextIO) -> int:
    """Unreadable or malformed JSON input files."""
    logger.error(f"File Error: {exc}")
    detail = {}
    if isinstance(exc, json.JSONDecodeError):
        detail = {"line": exc.lineno, "column": exc.colno}
    elif isinstance(exc, OSError) and exc.filename:
        detail = {"path": str(exc.filename)}
    report = ErrorReport(
        error=type(exc).__name__,
        message=str(exc) if isinstance(exc, json.JSONDecodeError) else (exc.strerror or str(exc)),
        detail=detail,
        exit_code=EXIT_INVALID_INPUT,
    )
    return _emit(report, stream)


def generic_error_handler(exc: Exception, stream: TextIO) -> int:
    """
    Handle unexpected errors.

    Args:
        exc: Any exception not covered by the other handlers
        stream: Destination of the diagnostic

    Returns:
        Invalid-input exit code
    """
    log_exception(exc, "Unhandled exception")
    report = ErrorReport(
        error="InternalError",
        message=f"{type(exc).__name__}: {exc}",
        exit_code=EXIT_INVALID_INPUT,
    )
    return _emit(report, stream)


def handle_error(exc: Exception, stream: Optional[TextIO] = None) -> int:
    """Route an exception to its handler and return the exit code."""
    stream = stream or sys.stderr
    if isinstance(exc, ToricError):
        return toric_error_handler(exc, stream)
    if isinstance(exc, ValidationError):
        return validation_error_handler(exc, stream)
    if isinstance(exc, (json.JSONDecodeError, OSError)):
        return file_error_handler(exc, stream)
    return generic_error_handler(exc, stream)
