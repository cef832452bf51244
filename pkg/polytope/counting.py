"""
Brute-force lattice-point counts of dilated polytopes and their faces.

One bounding-box scan of l*P records, for every lattice point, the set
of facets it lies on; that set names the face whose relative interior
contains the point. Closed counts of faces and of subcomplexes are sums
of these relative-interior counts.
"""

from functools import lru_cache
from itertools import product
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, List, Literal, Mapping, Optional

from utils.helpers import parallel_map
from utils.logger import log_performance
from .model import Face, LatticePolytope

CountMode = Literal["closed", "relative-interior"]


def _scan_slab(polytope: LatticePolytope, dilation: int, first: int) -> Dict[FrozenSet[int], int]:
    lows = [dilation * min(v[i] for v in polytope.vertices) for i in range(polytope.rank)]
    highs = [dilation * max(v[i] for v in polytope.vertices) for i in range(polytope.rank)]
    ranges = [range(lo, hi + 1) for lo, hi in zip(lows[1:], highs[1:])]

    tally: Dict[FrozenSet[int], int] = {}
    for rest in product(*ranges):
        point = (first,) + rest
        tight = []
        inside = True
        for index, facet in enumerate(polytope.facets):
            slack = facet.slack(point, dilation)
            if slack < 0:
                inside = False
                break
            if slack == 0:
                tight.append(index)
        if inside:
            key = frozenset(tight)
            tally[key] = tally.get(key, 0) + 1
    return tally


@lru_cache(maxsize=128)
@log_performance("relint_counts")
def relint_counts(polytope: LatticePolytope, dilation: int = 1) -> Mapping[Face, int]:
    """
    |Relint(l*Q) ∩ M| for every face Q.

    At dilation 0 every l*Q is the origin, so each face counts 1.

    Args:
        polytope: The polytope
        dilation: l >= 0

    Returns:
        Read-only count per face, faces with no relative-interior points included
    """
    if dilation < 0:
        raise ValueError("dilation must be nonnegative")
    if dilation == 0:
        return MappingProxyType({face: 1 for face in polytope.faces})

    lo = dilation * min(v[0] for v in polytope.vertices)
    hi = dilation * max(v[0] for v in polytope.vertices)
    slabs = parallel_map(lambda x: _scan_slab(polytope, dilation, x), range(lo, hi + 1))

    by_facets = {face.facets: face for face in polytope.faces}
    counts = {face: 0 for face in polytope.faces}
    for tally in slabs:
        for tight, number in tally.items():
            counts[by_facets[tight]] += number
    return MappingProxyType(counts)


def count_lattice_points(
    polytope: LatticePolytope,
    dilation: int = 1,
    mode: CountMode = "closed",
    face: Optional[Face] = None,
) -> int:
    """
    Lattice points of l*Q for a face Q (default P itself).

    Args:
        polytope: The polytope
        dilation: l >= 0
        mode: "closed" or "relative-interior"
        face: Face to count, default the full polytope

    Returns:
        Exact count
    """
    target = face or polytope.full_face
    counts = relint_counts(polytope, dilation)
    if dilation == 0:
        return 1
    if mode == "relative-interior":
        return counts[target]
    return sum(counts[q] for q in polytope.faces_within(target))


def count_union(polytope: LatticePolytope, faces: Iterable[Face], dilation: int = 1) -> int:
    """Lattice points of the union of l*Q over a face-closed family, each point once."""
    family = set(faces)
    counts = relint_counts(polytope, dilation)
    if dilation == 0:
        return 1 if family else 0
    return sum(counts[q] for q in family)


def interior_count(polytope: LatticePolytope, dilation: int = 1) -> int:
    """|Int(l*P) ∩ M|."""
    return count_lattice_points(polytope, dilation, mode="relative-interior")


def bruteforce_counts(polytope: LatticePolytope, max_dilate: int) -> List[int]:
    """Closed counts of l*P for l = 0..max_dilate."""
    return [count_lattice_points(polytope, ell) for ell in range(max_dilate + 1)]
