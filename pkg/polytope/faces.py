"""
Face lattice of a polytope from intersections of facets.
"""

from typing import FrozenSet, List, Set

from errors import NotPolygon
from .model import Face, LatticePolytope, affine_rank


def enumerate_faces(polytope: LatticePolytope) -> List[Face]:
    """
    All nonempty faces, P included.

    Faces are the nonempty intersections of facet vertex sets, closed
    under pairwise intersection. Sorted by dimension, then vertex indices.
    """
    facets = polytope.facets
    everything = frozenset(range(len(polytope.vertices)))
    vertex_sets: Set[FrozenSet[int]] = {f.vertices for f in facets}

    frontier = set(vertex_sets)
    while frontier:
        fresh = set()
        for a in frontier:
            for b in vertex_sets:
                meet = a & b
                if meet and meet not in vertex_sets and meet not in fresh:
                    fresh.add(meet)
        vertex_sets |= fresh
        frontier = fresh
    vertex_sets.add(everything)

    faces = []
    for members in vertex_sets:
        points = [polytope.vertices[i] for i in sorted(members)]
        supporting = frozenset(j for j, f in enumerate(facets) if members <= f.vertices)
        faces.append(Face(members, affine_rank(points), supporting))
    faces.sort(key=lambda f: (f.dimension, sorted(f.vertices)))
    return faces


def face_counts(polytope: LatticePolytope) -> dict:
    """Number of faces per dimension."""
    counts: dict = {}
    for face in polytope.faces:
        counts[face.dimension] = counts.get(face.dimension, 0) + 1
    return counts


def cyclic_vertices(polytope: LatticePolytope) -> List[int]:
    """
    Vertex indices of a polygon in boundary order, starting at vertex 0.

    Raises:
        NotPolygon: If the polytope is not two-dimensional
    """
    if polytope.rank != 2:
        raise NotPolygon("cyclic vertex order needs a polygon", {"rank": polytope.rank})

    edges = [sorted(f.vertices) for f in polytope.faces_of_dimension(1)]
    order = [0]
    previous = None
    while len(order) < len(polytope.vertices):
        current = order[-1]
        for a, b in edges:
            other = b if a == current else a if b == current else None
            if other is not None and other != previous:
                previous = current
                order.append(other)
                break
    return order
