"""
Logging for the class engine.

Records go to stderr; standard output carries only reports. With
--log-format json every record is one JSON line (python-json-logger),
otherwise plain or colored text.
"""

import functools
import logging
import sys
import time
from typing import Any, Dict, Optional

from pythonjsonlogger import jsonlogger

from config import settings

TEXT_FORMAT = "%(asctime)s %(levelname)-8s %(name)s: %(message)s"
FILE_FORMAT = "%(asctime)s %(levelname)-8s %(module)s.%(funcName)s:%(lineno)d %(message)s"
JSON_FIELDS = "%(asctime)s %(name)s %(levelname)s %(message)s %(module)s %(funcName)s"
DATE_FORMAT = "%Y-%m-%dT%H:%M:%S"


class ColoredFormatter(logging.Formatter):
    """Text formatter that colors the level name."""

    COLORS = {
        "DEBUG": "\033[36m",
        "INFO": "\033[32m",
        "WARNING": "\033[33m",
        "ERROR": "\033[31m",
        "CRITICAL": "\033[35m",
    }
    RESET = "\033[0m"

    def format(self, record: logging.LogRecord) -> str:
        plain = record.levelname
        color = self.COLORS.get(plain)
        if color:
            record.levelname = f"{color}{plain}{self.RESET}"
        try:
            return super().format(record)
        finally:
            record.levelname = plain


def _console_formatter() -> logging.Formatter:
    if settings.is_json_logging:
        return jsonlogger.JsonFormatter(JSON_FIELDS, datefmt=DATE_FORMAT)
    if settings.enable_color:
        return ColoredFormatter(TEXT_FORMAT, datefmt=DATE_FORMAT)
    return logging.Formatter(TEXT_FORMAT, datefmt=DATE_FORMAT)


def setup_logger(name: str = "toric", level: Optional[str] = None) -> logging.Logger:
    """
    Build the engine logger from the current settings.

    Args:
        name: Logger name
        level: Level override, default settings.log_level

    Returns:
        The configured logger
    """
    log = logging.getLogger(name)
    numeric_level = getattr(logging, (level or settings.log_level).upper(), logging.WARNING)
    log.setLevel(logging.DEBUG if settings.log_file else numeric_level)
    log.handlers.clear()
    log.propagate = False

    console = logging.StreamHandler(sys.stderr)
    console.setLevel(numeric_level)
    console.setFormatter(_console_formatter())
    log.addHandler(console)

    if settings.log_file:
        # the file keeps the full debug trace regardless of --log-level
        trace = logging.FileHandler(settings.log_file, encoding="utf-8")
        trace.setLevel(logging.DEBUG)
        trace.setFormatter(logging.Formatter(FILE_FORMAT, datefmt=DATE_FORMAT))
        log.addHandler(trace)

    return log


logger = setup_logger()


def reconfigure_logger() -> logging.Logger:
    """Rebuild handlers after the CLI has applied its flags."""
    return setup_logger(logger.name)


def log_exception(exc: Exception, context: Optional[str] = None) -> None:
    """
    Log an exception with its traceback.

    Args:
        exc: The exception
        context: Optional prefix naming where it surfaced
    """
    message = f"{type(exc).__name__}: {exc}"
    logger.error(f"{context}: {message}" if context else message, exc_info=exc)


def log_check_activity(check_name: str, action: str, details: Optional[Dict[str, Any]] = None) -> None:
    """
    Structured record of one identity-check step.

    The check name, action and details travel as `extra` fields, so
    JSON logs carry them as keys.
    """
    fields: Dict[str, Any] = {"check": check_name, "action": action}
    fields.update(details or {})
    logger.info(f"[{check_name}] {action}", extra=fields)


class LogBlock:
    """
    Context manager that logs the start, end and duration of a computation.

    Example:
        with LogBlock("ehrhart via classes"):
            ...
    """

    def __init__(self, operation: str, level: str = "INFO"):
        self.operation = operation
        self.level = getattr(logging, level.upper(), logging.INFO)
        self._started = 0.0

    def __enter__(self) -> "LogBlock":
        self._started = time.perf_counter()
        logger.log(self.level, f"Starting: {self.operation}")
        return self

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self._started

    def __exit__(self, exc_type, exc_val, exc_tb) -> bool:
        if exc_type is None:
            logger.log(self.level, f"Completed: {self.operation} ({self.elapsed:.3f}s)")
        else:
            logger.warning(
                f"Failed: {self.operation} after {self.elapsed:.3f}s: {exc_type.__name__}: {exc_val}",
                extra={"operation": self.operation, "error": exc_type.__name__},
            )
        return False


def log_performance(operation_name: Optional[str] = None):
    """
    Decorator timing a function at debug level.

    Args:
        operation_name: Name in the record, default the function name
    """
    def decorator(func):
        name = operation_name or func.__name__

        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            started = time.perf_counter()
            outcome = "failed"
            try:
                result = func(*args, **kwargs)
                outcome = "completed"
                return result
            finally:
                logger.debug(f"Performance: {name} {outcome} in {time.perf_counter() - started:.4f}s")

        return wrapper
    return decorator
