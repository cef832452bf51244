"""
Classes through the orbit decomposition X = disjoint union of O_sigma.

Each orbit closure V_sigma is the toric variety of the star fan of sigma;
its Todd classes are computed there and pushed forward.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional

from fan import Cone, ConeSubset, Fan, star_fan
from intersect import CycleClass, pushforward_from_star
from scalars import YPolynomial, YRational
from utils.helpers import parallel_map
from .lrr import hirzebruch_class, todd_lrr, todd_omega


def _members(fan: Fan, subset: Optional[ConeSubset]):
    if subset is None:
        return list(fan.cones)
    if subset.fan is not fan:
        raise ValueError("cone subset belongs to a different fan")
    return list(subset)


def chi_y_subset(fan: Fan, subset: Optional[ConeSubset] = None) -> YPolynomial:
    """
    chi_y of the closed subset: sum_{sigma in subset} (-1 - y)^(dim O_sigma).

    The fan need not be complete.
    """
    base = YPolynomial([-1, -1])
    total = YPolynomial()
    for cone in _members(fan, subset):
        total = total + base ** fan.orbit_dimension(cone)
    return total


def signature(fan: Fan) -> int:
    """sum_sigma (-2)^(dim O_sigma)."""
    return sum((-2) ** fan.orbit_dimension(c) for c in fan.cones)


def euler_count(fan: Fan) -> int:
    """Number of maximal-dimensional cones, the Euler characteristic of X."""
    return len(fan.cones_of_dimension(fan.rank))


@lru_cache(maxsize=128)
def star_todd(fan: Fan, cone: Cone) -> CycleClass:
    """td_*(V_sigma) pushed forward to X."""
    star = star_fan(fan, cone)
    return pushforward_from_star(star, todd_lrr(star.fan))


@lru_cache(maxsize=128)
def star_todd_omega(fan: Fan, cone: Cone) -> CycleClass:
    """td_*([omega_{V_sigma}]) pushed forward to X."""
    star = star_fan(fan, cone)
    return pushforward_from_star(star, todd_omega(star.fan))


@lru_cache(maxsize=128)
def star_hirzebruch(fan: Fan, cone: Cone, normalized: bool) -> CycleClass:
    """Hirzebruch class of V_sigma pushed forward to X."""
    star = star_fan(fan, cone)
    return pushforward_from_star(star, hirzebruch_class(star.fan, normalized))


def orbit_sum(
    fan: Fan,
    term: Callable[[Cone], CycleClass],
    subset: Optional[ConeSubset] = None,
) -> CycleClass:
    """Sum of per-cone classes over a subset, computed in parallel."""
    total = CycleClass.zero(fan)
    for part in parallel_map(term, _members(fan, subset)):
        total = total + part
    return total


def orbit_classes_subset(
    fan: Fan,
    subset: Optional[ConeSubset] = None,
    normalized: bool = True,
) -> CycleClass:
    """
    Hirzebruch class of the closed subset X_{subset}, pushed to X.

    Un-normalized: sum_sigma (1 + y)^(dim O_sigma) td_*([omega_{V_sigma}]).
    Normalized: sum_sigma sum_k (-1 - y)^(dim O_sigma - k) td_k(V_sigma).

    Args:
        fan: Simplicial fan
        subset: Star-closed subset, default the whole fan
        normalized: Which normalization

    Returns:
        CycleClass over Q[y]
    """
    if normalized:
        def term(cone: Cone) -> CycleClass:
            e = fan.orbit_dimension(cone)
            base = YRational(YPolynomial([-1, -1]))
            return star_todd(fan, cone).scale_by_degree(lambda k: base ** (e - k))
    else:
        def term(cone: Cone) -> CycleClass:
            return star_todd_omega(fan, cone).scale(YRational.unit_power(fan.orbit_dimension(cone)))

    return orbit_sum(fan, term, subset)


def ehler_chern_class(fan: Fan, subset: Optional[ConeSubset] = None) -> CycleClass:
    """MacPherson-Chern class: the normalized orbit class at y = -1."""
    return orbit_classes_subset(fan, subset, normalized=True).specialize(-1)


def todd_subset(fan: Fan, subset: Optional[ConeSubset] = None) -> CycleClass:
    """Todd class of the closed subset: the orbit class at y = 0."""
    return orbit_classes_subset(fan, subset, normalized=True).specialize(0)


def orbit_todd_dual_sum(fan: Fan) -> CycleClass:
    """sum_sigma (-1)^(dim sigma) td_*(V_sigma), which equals td_*([omega_X])."""
    return orbit_sum(fan, lambda c: star_todd(fan, c).scale(Fraction((-1) ** len(c))))
