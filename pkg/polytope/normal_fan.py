"""
Inner normal fan of a simple lattice polytope.
"""

from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping

from errors import NotSimple
from fan import Cone, Fan, build_fan
from intersect import DivisorClass
from .model import Face, LatticePolytope


@dataclass(frozen=True, eq=False)
class NormalFan:
    """The normal fan with the face -> cone correspondence Q -> sigma_Q."""

    polytope: LatticePolytope
    fan: Fan
    face_to_cone: Mapping[Face, Cone]

    def cone_of(self, face: Face) -> Cone:
        return self.face_to_cone[face]


@lru_cache(maxsize=128)
def normal_fan(polytope: LatticePolytope) -> NormalFan:
    """
    Build the normal fan: one ray per facet normal, one maximal cone per vertex.

    sigma_Q is spanned by the normals of the facets containing Q, so
    dim sigma_Q = d - dim Q and P itself maps to the zero cone.

    Raises:
        NotSimple: If a vertex lies on more than d facets
    """
    d = polytope.rank
    for vertex in polytope.faces_of_dimension(0):
        if len(vertex.facets) > d:
            index = next(iter(vertex.vertices))
            raise NotSimple(
                f"vertex {list(polytope.vertices[index])} lies on {len(vertex.facets)} facets",
                {"vertex": index, "facets": sorted(vertex.facets)},
            )

    rays = [f.normal for f in polytope.facets]
    max_cones = [tuple(sorted(v.facets)) for v in polytope.faces_of_dimension(0)]
    fan = build_fan(d, rays, max_cones)
    face_to_cone = {face: tuple(sorted(face.facets)) for face in polytope.faces}
    return NormalFan(polytope, fan, MappingProxyType(face_to_cone))


def polytope_divisor(polytope: LatticePolytope, dilation: int = 1) -> DivisorClass:
    """D_P = sum_F a_F x_{rho_F}; dilation scales every a_F."""
    return DivisorClass({index: f.offset * dilation for index, f in enumerate(polytope.facets)})
