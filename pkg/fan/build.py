"""
Fan construction and validation.
"""

import itertools
import math
from collections import Counter, deque
from typing import List, Sequence

from errors import BadIntersection, InvalidFanData, NonPrimitiveRay, NotSimplicial
from lattice import multiplicity, quotient_map, rational, saturation_basis
from utils.logger import logger, log_performance
from .model import Cone, Fan, cone_label


def _normalize_rays(rank: int, rays: Sequence[Sequence[int]]) -> List[tuple]:
    normalized = []
    seen = {}
    for index, ray in enumerate(rays):
        vector = tuple(int(x) for x in ray)
        if len(vector) != rank:
            raise InvalidFanData(
                f"ray {index} has length {len(vector)}, lattice rank is {rank}",
                {"ray": index},
            )
        g = 0
        for x in vector:
            g = math.gcd(g, x)
        if g != 1:
            raise NonPrimitiveRay(
                f"ray {index} = {list(vector)} is not a primitive nonzero vector",
                {"ray": index, "vector": list(vector)},
            )
        if vector in seen:
            raise InvalidFanData(
                f"rays {seen[vector]} and {index} coincide",
                {"rays": [seen[vector], index]},
            )
        seen[vector] = index
        normalized.append(vector)
    return normalized


def _normalize_cones(num_rays: int, max_cones: Sequence[Sequence[int]]) -> List[Cone]:
    cones = set()
    for cone in max_cones:
        indices = [int(i) for i in cone]
        for i in indices:
            if not 0 <= i < num_rays:
                raise InvalidFanData(f"ray index {i} out of range", {"cone": indices})
        if len(set(indices)) != len(indices):
            raise InvalidFanData(f"cone {indices} repeats a ray", {"cone": indices})
        cones.add(tuple(sorted(indices)))

    # keep only cones that are not faces of another listed cone
    maximal = [c for c in cones if not any(c != o and set(c) < set(o) for o in cones)]
    if not maximal:
        maximal = [()]
    return sorted(maximal, key=lambda c: (len(c), c))


def _meet_in_common_face(rays, rank: int, sigma: Cone, tau: Cone) -> bool:
    """
    Whether two simplicial cones intersect in their common face.

    Projects the non-shared generators to the quotient by the shared
    span; the cones overlap beyond the shared face exactly when some
    circuit of (sigma generators, -tau generators) has a same-sign
    kernel vector.
    """
    shared = sorted(set(sigma) & set(tau))
    only_sigma = [i for i in sigma if i not in shared]
    only_tau = [i for i in tau if i not in shared]
    if not only_sigma or not only_tau:
        return True

    q = quotient_map(saturation_basis([rays[i] for i in shared]), rank)
    columns = [q.project(rays[i]) for i in only_sigma]
    columns += [tuple(-x for x in q.project(rays[i])) for i in only_tau]
    height = q.quotient_rank

    for size in range(2, len(columns) + 1):
        for subset in itertools.combinations(range(len(columns)), size):
            matrix = [[columns[c][row] for c in subset] for row in range(height)]
            kernel = rational.nullspace(matrix, size)
            if len(kernel) != 1:
                continue
            vector = kernel[0]
            if any(x == 0 for x in vector):
                continue
            if all(x > 0 for x in vector) or all(x < 0 for x in vector):
                return False
    return True


def _in_support(fan: Fan, direction: Sequence[int]) -> bool:
    for cone in fan.maximal_cones:
        coords = rational.coordinates(fan.generators(cone), direction)
        if coords is not None and all(c >= 0 for c in coords):
            return True
    return False


def check_completeness(fan: Fan) -> bool:
    """
    Completeness test for a simplicial fan.

    Pure of full dimension, every ridge on exactly two top cones, a
    connected top-cone adjacency graph, and every sample direction
    (+-e_i and +-e_i +- e_j) inside the support.
    """
    d = fan.rank
    if d == 0:
        return True
    if any(len(c) != d for c in fan.maximal_cones):
        return False

    ridges = Counter()
    for cone in fan.maximal_cones:
        for ridge in itertools.combinations(cone, d - 1):
            ridges[ridge] += 1
    if any(count != 2 for count in ridges.values()):
        return False

    # adjacency through shared ridges
    tops = list(fan.maximal_cones)
    reached = {tops[0]}
    queue = deque([tops[0]])
    while queue:
        current = queue.popleft()
        for other in tops:
            if other not in reached and len(set(current) & set(other)) == d - 1:
                reached.add(other)
                queue.append(other)
    if len(reached) != len(tops):
        return False

    basis = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    samples = []
    for e in basis:
        samples += [e, tuple(-x for x in e)]
    for a, b in itertools.combinations(basis, 2):
        for sa in (1, -1):
            for sb in (1, -1):
                samples.append(tuple(sa * x + sb * y for x, y in zip(a, b)))
    return all(_in_support(fan, v) for v in samples)


@log_performance("build_fan")
def build_fan(rank: int, rays: Sequence[Sequence[int]], max_cones: Sequence[Sequence[int]]) -> Fan:
    """
    Build and validate a simplicial fan.

    Args:
        rank: Lattice rank d
        rays: Primitive, distinct ray generators
        max_cones: Ray-index sets of the maximal cones

    Returns:
        Fan closed under faces with cached multiplicities

    Raises:
        InvalidFanData: Malformed indices, repeated or unused rays
        NonPrimitiveRay: Zero or non-primitive generator
        NotSimplicial: A cone with dependent rays
        BadIntersection: Two cones meeting outside a common face
    """
    if rank < 0:
        raise InvalidFanData("lattice rank must be nonnegative", {"rank": rank})

    ray_list = _normalize_rays(rank, rays)
    maximal = _normalize_cones(len(ray_list), max_cones)

    used = {i for cone in maximal for i in cone}
    unused = [i for i in range(len(ray_list)) if i not in used]
    if unused:
        raise InvalidFanData(f"rays {unused} belong to no cone", {"rays": unused})

    for cone in maximal:
        gens = [ray_list[i] for i in cone]
        if rational.rank(gens) != len(gens):
            raise NotSimplicial(
                f"{cone_label(None, cone)} has linearly dependent rays",
                {"cone": list(cone)},
            )

    for sigma, tau in itertools.combinations(maximal, 2):
        if not _meet_in_common_face(ray_list, rank, sigma, tau):
            raise BadIntersection(
                f"{cone_label(None, sigma)} and {cone_label(None, tau)} meet outside a common face",
                {"cones": [list(sigma), list(tau)]},
            )

    all_cones = set()
    for cone in maximal:
        for k in range(len(cone) + 1):
            all_cones.update(itertools.combinations(cone, k))
    cones = sorted(all_cones, key=lambda c: (len(c), c))

    multiplicities = {c: multiplicity([ray_list[i] for i in c]) for c in cones}

    fan = Fan(rank, ray_list, maximal, cones, multiplicities)
    logger.debug(f"Built {fan} with {sum(1 for m in multiplicities.values() if m > 1)} singular cones")
    return fan
