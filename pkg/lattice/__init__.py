"""
Integer lattice linear algebra.

This package provides:
- Smith and Hermite normal forms (sympy DomainMatrix over ZZ)
- Saturation, quotient maps, multiplicities
- Parallelotope point enumeration and primitive dual vectors
- Exact rational elimination helpers (DomainMatrix over QQ)
"""

from .normal_forms import SmithDecomposition, smith_normal_form, hermite_normal_form, int_matrix, int_rows
from .sublattice import (
    IntVector,
    QuotientMap,
    ParallelotopePoint,
    saturation_basis,
    quotient_map,
    generator_coordinates,
    multiplicity,
    parallelotope_points,
    primitive_duals,
    dual_functional,
    lattice_rank,
)
from . import rational

__all__ = [
    "IntVector",
    "SmithDecomposition",
    "QuotientMap",
    "ParallelotopePoint",
    "smith_normal_form",
    "hermite_normal_form",
    "int_matrix",
    "int_rows",
    "saturation_basis",
    "quotient_map",
    "generator_coordinates",
    "multiplicity",
    "parallelotope_points",
    "primitive_duals",
    "dual_functional",
    "lattice_rank",
    "rational",
]
