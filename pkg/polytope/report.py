"""
Facet report for `polytope facets`.
"""

from errors import NotSimple
from schemas.reports import FacetEntry, FacetReport
from .faces import face_counts
from .model import LatticePolytope
from .normal_fan import normal_fan


def facet_report(polytope: LatticePolytope) -> FacetReport:
    """Facets, face census and, for simple polytopes, the normal fan."""
    rays, cones = [], []
    simple = polytope.is_simple
    if simple:
        try:
            normal = normal_fan(polytope)
        except NotSimple:
            simple = False
        else:
            rays = [list(r) for r in normal.fan.rays]
            cones = [list(c) for c in normal.fan.maximal_cones]

    return FacetReport(
        rank=polytope.rank,
        facets=[
            FacetEntry(normal=list(f.normal), offset=f.offset, vertices=sorted(f.vertices))
            for f in polytope.facets
        ],
        face_counts=face_counts(polytope),
        simple=simple,
        normal_fan_rays=rays,
        normal_fan_max_cones=cones,
    )
