"""
Facet presentation of a lattice polytope.

Brute force over d-subsets of vertices: each subset spanning a
hyperplane with every vertex on one side gives a facet.
"""

import math
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from lattice import IntVector, rational
from utils.helpers import primitive_vector
from utils.logger import log_performance, logger
from .model import Facet, LatticePolytope


def _integral_normal(vector: Sequence) -> IntVector:
    scale = 1
    for entry in vector:
        scale = scale * entry.denominator // math.gcd(scale, entry.denominator)
    return primitive_vector([int(entry * scale) for entry in vector])


def _facet_key(normal: IntVector) -> Tuple:
    # coordinate facets first, then by descending magnitude
    return (any(c < 0 for c in normal), tuple(-abs(c) for c in normal), tuple(-c for c in normal))


@log_performance("compute_facets")
def compute_facets(polytope: LatticePolytope) -> List[Facet]:
    """
    Inward primitive normals, offsets and incident vertices of every facet.

    P = {m : <u_F, m> >= -a_F for all F}. Facets are sorted with the
    nonnegative normals first.

    Args:
        polytope: Full-dimensional polytope

    Returns:
        Facets in deterministic order
    """
    vertices = polytope.vertices
    d = polytope.rank
    found: Dict[IntVector, Facet] = {}

    for subset in combinations(range(len(vertices)), d):
        base = vertices[subset[0]]
        differences = [[a - b for a, b in zip(vertices[i], base)] for i in subset[1:]]
        kernel = rational.nullspace(differences, d)
        if len(kernel) != 1:
            continue

        normal = _integral_normal(kernel[0])
        values = [rational.dot(normal, v) for v in vertices]
        level = rational.dot(normal, base)
        if not all(v >= level for v in values):
            if not all(v <= level for v in values):
                continue
            normal = tuple(-c for c in normal)
            level = -level

        if normal in found:
            continue
        incident = frozenset(i for i, v in enumerate(vertices) if rational.dot(normal, v) == level)
        found[normal] = Facet(normal, -level, incident)

    facets = sorted(found.values(), key=lambda f: _facet_key(f.normal))
    logger.debug(f"{len(facets)} facets found for {polytope!r}")
    return facets


def facet_inequalities(polytope: LatticePolytope) -> List[Tuple[IntVector, int]]:
    """(normal, offset) pairs of the facet presentation."""
    return [(f.normal, f.offset) for f in polytope.facets]
