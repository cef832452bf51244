"""
Polytopal subcomplexes: closed unions of faces.
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Sequence

from errors import InvalidPolytopeData
from fan import ConeSubset, cone_subset_from_faces
from schemas.inputs import PolytopeSubcomplexInput
from .model import Face, LatticePolytope
from .normal_fan import normal_fan


@dataclass(frozen=True, eq=False)
class PolytopalSubcomplex:
    """A face-closed set of faces of a polytope."""

    polytope: LatticePolytope
    faces: FrozenSet[Face]

    def __iter__(self):
        return iter(f for f in self.polytope.faces if f in self.faces)

    def __len__(self) -> int:
        return len(self.faces)

    @property
    def is_full(self) -> bool:
        return self.polytope.full_face in self.faces

    def cone_subset(self) -> ConeSubset:
        """The star-closed cone subset {sigma_Q} over the normal fan."""
        normal = normal_fan(self.polytope)
        return cone_subset_from_faces(normal.fan, normal.face_to_cone, self)


def subcomplex(polytope: LatticePolytope, faces: Iterable[Sequence[int]]) -> PolytopalSubcomplex:
    """
    Close a list of faces (as vertex-index lists) under taking faces.

    Raises:
        InvalidPolytopeData: If a vertex set is not a face
    """
    members = set()
    for indices in faces:
        key = frozenset(int(i) for i in indices)
        face = polytope.face_by_vertices.get(key)
        if face is None:
            raise InvalidPolytopeData(f"{sorted(key)} is not a face of the polytope", {"face": sorted(key)})
        members.update(polytope.faces_within(face))
    return PolytopalSubcomplex(polytope, frozenset(members))


def boundary(polytope: LatticePolytope) -> PolytopalSubcomplex:
    """All proper faces."""
    full = polytope.full_face
    return PolytopalSubcomplex(polytope, frozenset(f for f in polytope.faces if f != full))


def whole(polytope: LatticePolytope) -> PolytopalSubcomplex:
    """The polytope with all its faces."""
    return PolytopalSubcomplex(polytope, frozenset(polytope.faces))


def subcomplex_from_input(polytope: LatticePolytope, data: Optional[PolytopeSubcomplexInput]) -> PolytopalSubcomplex:
    """Resolve subcomplex JSON; None means the whole polytope."""
    if data is None:
        return whole(polytope)
    if data.boundary:
        return boundary(polytope)
    return subcomplex(polytope, data.faces or [])


def euler_characteristic(complex_: PolytopalSubcomplex) -> int:
    """sum over faces of (-1)^(dim Q)."""
    return sum((-1) ** f.dimension for f in complex_.faces)


def faces_by_dimension(complex_: PolytopalSubcomplex) -> List[List[Face]]:
    """Faces grouped by dimension 0..d."""
    groups: List[List[Face]] = [[] for _ in range(complex_.polytope.rank + 1)]
    for face in complex_:
        groups[face.dimension].append(face)
    return groups
