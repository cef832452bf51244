"""
Utility functions and helpers for the toric class engine.

This module provides:
- Logging configuration and utilities
- Helper functions for rationals, tables and thread pools
- Validation utilities for command options
"""

from .logger import logger, setup_logger, reconfigure_logger, log_exception, LogBlock, log_performance
from .helpers import (
    parse_rational,
    format_rational,
    primitive_vector,
    parallel_map,
    render_table,
    dump_report,
)
from .validators import (
    validate_specialization,
    validate_max_dilate,
    validate_threads,
    validate_rank_cap,
)

__all__ = [
    # Logging
    "logger",
    "setup_logger",
    "reconfigure_logger",
    "log_exception",
    "LogBlock",
    "log_performance",
    # Helpers
    "parse_rational",
    "format_rational",
    "primitive_vector",
    "parallel_map",
    "render_table",
    "dump_report",
    # Validators
    "validate_specialization",
    "validate_max_dilate",
    "validate_threads",
    "validate_rank_cap",
]
