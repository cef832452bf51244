"""
Simplicial fans.

This package provides:
- Fan construction with face closure and intersection validation
- Multiplicities and the finite groups G_sigma with their characters
- Star fans of cones and the torus-factor split
- Star-closed cone subsets
"""

from .model import Cone, GroupElement, ConeGroup, Fan, ConeSubset, compute_cone_group, cone_label
from .build import build_fan, check_completeness
from .star import StarFan, star_fan, span_reduction
from .subsets import star_closed_subset, boundary_subset, cone_subset_from_faces
from .report import fan_report

__all__ = [
    "Cone",
    "GroupElement",
    "ConeGroup",
    "Fan",
    "ConeSubset",
    "compute_cone_group",
    "cone_label",
    "build_fan",
    "check_completeness",
    "StarFan",
    "star_fan",
    "span_reduction",
    "star_closed_subset",
    "boundary_subset",
    "cone_subset_from_faces",
    "fan_report",
]
