"""
Star-closed cone subsets (torus-invariant closed subvarieties).
"""

from typing import Iterable, List, Mapping, Sequence

from errors import NotStarClosed
from .model import Cone, ConeSubset, Fan, cone_label


def star_closed_subset(fan: Fan, cones: Iterable[Sequence[int]]) -> ConeSubset:
    """
    Validate and wrap a star-closed set of cones.

    Args:
        fan: Ambient fan
        cones: Ray-index sets of the member cones

    Returns:
        ConeSubset of the fan

    Raises:
        InvalidFanData: If a listed cone is not in the fan
        NotStarClosed: If a cone containing a member is missing
    """
    members = frozenset(fan.check_cone(c) for c in cones)
    for face in fan.cones:
        if face not in members:
            continue
        for cone in fan.cones_containing(face):
            if cone not in members:
                raise NotStarClosed(
                    f"{cone_label(fan, cone)} contains {cone_label(fan, face)} but is missing",
                    {"face": list(face), "missing": list(cone)},
                )
    return ConeSubset(fan, members)


def boundary_subset(fan: Fan) -> ConeSubset:
    """All nonzero cones; for a normal fan this is the polytope boundary."""
    return ConeSubset(fan, frozenset(c for c in fan.cones if c))


def cone_subset_from_faces(fan: Fan, face_to_cone: Mapping, faces: Iterable) -> ConeSubset:
    """
    Star-closed subset attached to a polytopal subcomplex.

    Args:
        fan: Normal fan of the polytope
        face_to_cone: Map face -> cone sigma_Q
        faces: Faces of the subcomplex

    Returns:
        The subset {sigma_Q : Q in the subcomplex}
    """
    cones: List[Cone] = [face_to_cone[face] for face in faces]
    return star_closed_subset(fan, cones)
