"""
Lattice polytopes.

This package provides:
- Vertex validation and the facet presentation
- The face lattice and polytopal subcomplexes
- The inner normal fan and the polytope divisor
- Brute-force lattice-point counts of dilations, per face
"""

from .model import Facet, Face, LatticePolytope, affine_rank, build_polytope
from .facets import compute_facets, facet_inequalities
from .faces import enumerate_faces, face_counts, cyclic_vertices
from .normal_fan import NormalFan, normal_fan, polytope_divisor
from .counting import (
    bruteforce_counts,
    count_lattice_points,
    count_union,
    interior_count,
    relint_counts,
)
from .subcomplex import (
    PolytopalSubcomplex,
    boundary,
    euler_characteristic,
    faces_by_dimension,
    subcomplex,
    subcomplex_from_input,
    whole,
)
from .report import facet_report

__all__ = [
    "Facet",
    "Face",
    "LatticePolytope",
    "affine_rank",
    "build_polytope",
    "compute_facets",
    "facet_inequalities",
    "enumerate_faces",
    "face_counts",
    "cyclic_vertices",
    "NormalFan",
    "normal_fan",
    "polytope_divisor",
    "bruteforce_counts",
    "count_lattice_points",
    "count_union",
    "interior_count",
    "relint_counts",
    "PolytopalSubcomplex",
    "boundary",
    "euler_characteristic",
    "faces_by_dimension",
    "subcomplex",
    "subcomplex_from_input",
    "whole",
    "facet_report",
]
