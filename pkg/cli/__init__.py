"""
Command-line front end.

This package provides:
- Argument parsing for the fan and polytope command groups
- Loading of fan, polytope and subset files through the input schemas
- Exception-to-exit-code handlers writing error reports to stderr
"""

from .commands import build_parser, run
from .error_handlers import handle_error
from .io import load_cone_subset, load_fan, load_polytope, load_subcomplex

__all__ = [
    "build_parser",
    "run",
    "handle_error",
    "load_cone_subset",
    "load_fan",
    "load_polytope",
    "load_subcomplex",
]
