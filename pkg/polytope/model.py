"""
Lattice polytope data model.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, List, Sequence, Tuple

from errors import InvalidPolytopeData, NotFullDimensional, RankTooHigh
from lattice import IntVector, rational
from config import settings
from utils.validators import validate_rank_cap


@dataclass(frozen=True)
class Facet:
    """Inequality <normal, m> >= -offset with the vertices on its hyperplane."""

    normal: IntVector
    offset: int
    vertices: FrozenSet[int]

    def slack(self, point: Sequence[int], dilation: int = 1) -> int:
        """<normal, m> + dilation * offset; nonnegative on dilation * P."""
        return sum(n * m for n, m in zip(self.normal, point)) + dilation * self.offset


@dataclass(frozen=True)
class Face:
    """A nonempty face: its vertex indices, dimension and the facets containing it."""

    vertices: FrozenSet[int]
    dimension: int
    facets: FrozenSet[int]


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    """Dimension of the affine span of a nonempty point set."""
    base = points[0]
    differences = [[p - b for p, b in zip(point, base)] for point in points[1:]]
    return rational.rank(differences) if differences else 0


class LatticePolytope:
    """
    A full-dimensional lattice polytope given by its vertices.

    Facets, faces and the normal fan are computed on first use.
    Instances compare by identity.
    """

    def __init__(self, vertices: Sequence[Sequence[int]]):
        self.vertices: Tuple[IntVector, ...] = tuple(tuple(int(c) for c in v) for v in vertices)
        self.rank = len(self.vertices[0])

    def __repr__(self):
        return f"LatticePolytope(rank={self.rank}, vertices={len(self.vertices)})"

    @cached_property
    def facets(self) -> List[Facet]:
        from .facets import compute_facets

        return compute_facets(self)

    @cached_property
    def faces(self) -> List[Face]:
        from .faces import enumerate_faces

        return enumerate_faces(self)

    @cached_property
    def face_by_vertices(self) -> Dict[FrozenSet[int], Face]:
        return {face.vertices: face for face in self.faces}

    @property
    def full_face(self) -> Face:
        return self.face_by_vertices[frozenset(range(len(self.vertices)))]

    def faces_of_dimension(self, dim: int) -> List[Face]:
        return [f for f in self.faces if f.dimension == dim]

    def faces_within(self, face: Face) -> List[Face]:
        """All faces contained in a face, the face included."""
        return [f for f in self.faces if f.vertices <= face.vertices]

    @property
    def is_simple(self) -> bool:
        return all(len(f.facets) == self.rank for f in self.faces_of_dimension(0))


def build_polytope(vertices: Sequence[Sequence[int]]) -> LatticePolytope:
    """
    Validate vertex data and build a polytope.

    Args:
        vertices: Integer vertices, all of the same length

    Returns:
        LatticePolytope with its facets computed

    Raises:
        InvalidPolytopeData: On duplicates, rank 0 or a listed non-vertex
        NotFullDimensional: If the vertices do not span the ambient space
        RankTooHigh: Above the facet enumeration cap
    """
    if not vertices or not vertices[0]:
        raise InvalidPolytopeData("a polytope needs at least one vertex of positive rank")
    rank = len(vertices[0])
    if any(len(v) != rank for v in vertices):
        raise InvalidPolytopeData("vertices must all have the same length")

    valid, message = validate_rank_cap(rank, settings.polytope_rank_cap)
    if not valid:
        raise RankTooHigh(message, {"rank": rank, "cap": settings.polytope_rank_cap})

    seen = set()
    for index, vertex in enumerate(vertices):
        key = tuple(vertex)
        if key in seen:
            raise InvalidPolytopeData(f"duplicate vertex {list(key)}", {"vertex": index})
        seen.add(key)

    if affine_rank(vertices) < rank:
        raise NotFullDimensional(
            f"vertices span an affine space of dimension {affine_rank(vertices)} < {rank}",
            {"rank": rank},
        )

    polytope = LatticePolytope(vertices)
    for index in range(len(polytope.vertices)):
        incident = [f.normal for f in polytope.facets if index in f.vertices]
        if not incident or rational.rank(incident) < rank:
            raise InvalidPolytopeData(
                f"{list(polytope.vertices[index])} is not a vertex of the convex hull",
                {"vertex": index},
            )
    return polytope
