"""
Lattice-point counting through characteristic classes.

This package provides:
- Ehrhart polynomials of polytopes and subcomplexes from Todd classes
- Weighted counting identities (standard, dual and half weights)
- Hirzebruch polynomials with their face expansion
- Classical and parametrized Pick reports for polygons
"""

from .ehrhart import (
    ehrhart_bruteforce,
    ehrhart_coefficients,
    ehrhart_subcomplex,
    ehrhart_via_classes,
    evaluate,
    interior_count_via_dual_todd,
)
from .weighted import divisor_degree, weighted_count_identity, weighted_face_sum
from .hirzpoly import hirzebruch_polynomial, hirzebruch_polynomial_of_divisor, ishida_table
from .pick import pick_report, polygon_area, polygon_chi_y, polygon_class

__all__ = [
    "ehrhart_bruteforce",
    "ehrhart_coefficients",
    "ehrhart_subcomplex",
    "ehrhart_via_classes",
    "evaluate",
    "interior_count_via_dual_todd",
    "divisor_degree",
    "weighted_count_identity",
    "weighted_face_sum",
    "hirzebruch_polynomial",
    "hirzebruch_polynomial_of_divisor",
    "ishida_table",
    "pick_report",
    "polygon_area",
    "polygon_chi_y",
    "polygon_class",
]
