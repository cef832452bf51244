"""
Star fans of cones (orbit closures V_sigma) and the torus-factor split.
"""

from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, Mapping, Tuple

from lattice import quotient_map, rational, saturation_basis
from utils.helpers import primitive_vector
from utils.logger import logger
from .build import build_fan
from .model import Cone, Fan, cone_label


@dataclass(frozen=True, eq=False)
class StarFan:
    """
    Fan of the orbit closure V_sigma in N / N_sigma.

    ray_map sends an ambient ray index (a neighbor of the cone) to its
    star ray index. Star cone tau-bar corresponds to the ambient cone
    sigma + tau.
    """

    ambient: Fan
    cone: Cone
    fan: Fan
    ray_map: Mapping[int, int]

    def to_ambient(self, star_cone: Cone) -> Cone:
        """Ambient cone corresponding to a star cone."""
        inverse = self._inverse
        return tuple(sorted(self.cone + tuple(inverse[i] for i in star_cone)))

    def to_star(self, ambient_cone: Cone) -> Cone:
        """Star cone of an ambient cone containing the base cone."""
        extra = [i for i in ambient_cone if i not in self.cone]
        return tuple(sorted(self.ray_map[i] for i in extra))

    @property
    def _inverse(self) -> Dict[int, int]:
        return {star: ambient for ambient, star in self.ray_map.items()}


@lru_cache(maxsize=128)
def star_fan(fan: Fan, cone: Cone) -> StarFan:
    """
    Star fan of a cone.

    Args:
        fan: Ambient fan
        cone: A cone of the fan

    Returns:
        StarFan with the cone correspondence

    Raises:
        InvalidFanData: If the cone is not in the fan
        NotSaturatedQuotient: Never for a valid fan (N_sigma is saturated)
    """
    cone = fan.check_cone(cone)
    if not cone:
        return StarFan(fan, cone, fan, MappingProxyType({i: i for i in range(len(fan.rays))}))

    q = quotient_map(saturation_basis(fan.generators(cone)), fan.rank)

    neighbors = [
        i for i in range(len(fan.rays))
        if i not in cone and fan.has_cone(cone + (i,))
    ]
    ray_map = {i: k for k, i in enumerate(neighbors)}
    star_rays = [primitive_vector(q.project(fan.rays[i])) for i in neighbors]

    maximal = []
    for tau in fan.maximal_cones:
        if set(cone).issubset(tau):
            maximal.append(tuple(sorted(ray_map[i] for i in tau if i not in cone)))

    star = build_fan(q.quotient_rank, star_rays, maximal)
    logger.debug(f"Star fan of {cone_label(fan, cone)}: {star}")
    return StarFan(fan, cone, star, MappingProxyType(ray_map))


@lru_cache(maxsize=128)
def span_reduction(fan: Fan) -> Tuple[Fan, int]:
    """
    Split off the torus factor of a fan whose rays do not span N_R.

    The core fan lives on the saturated span of the rays, with the same
    ray and cone indices.

    Args:
        fan: A simplicial fan

    Returns:
        (core fan, torus rank r)
    """
    r = fan.torus_rank
    if r == 0:
        return fan, 0
    if not fan.rays:
        return build_fan(0, [], [()]), fan.rank

    basis = saturation_basis(fan.rays)
    coords = [[int(c) for c in rational.coordinates(basis, ray)] for ray in fan.rays]
    core = build_fan(len(basis), coords, fan.maximal_cones)
    logger.debug(f"Split torus factor of rank {r} from {fan}")
    return core, r
