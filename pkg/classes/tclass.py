"""
T-classes, mock T-classes and the half-weight Todd expansion.

T = sum_k 2^(d-k) td_k is the degreewise rescaled Todd class. Its
comparisons with L-type classes of orbit closures go through the
pushforward sums below.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict

from fan import Cone, Fan
from intersect import CohomExpression, CycleClass, cohom_cap, product
from utils.helpers import parallel_map
from .lrr import todd_lrr
from .mock import alpha_series, correction_series, mock_hirzebruch
from .orbit import orbit_sum, star_hirzebruch, star_todd
from .series import TODD_HALF_SHIFTED, trivial_factor


def t_class(fan: Fan) -> CycleClass:
    """T = sum_k 2^(d-k) td_k(X)."""
    d = fan.rank
    return todd_lrr(fan).scale_by_degree(lambda k: 2 ** (d - k))


def l_class_orbit_sum(fan: Fan, normalized: bool) -> CycleClass:
    """
    sum_sigma (k_sigma)_* of the y = 1 Hirzebruch class of V_sigma.

    normalized=True sums T-hat_1(V_sigma), otherwise T_1(V_sigma).
    """
    return orbit_sum(fan, lambda c: star_hirzebruch(fan, c, normalized).specialize(1))


def mock_t_class_of_orbit(fan: Fan, cone: Cone) -> CycleClass:
    """sum_{tau containing sigma} mock Hirzebruch class of V_tau at y = 1."""
    total = CycleClass.zero(fan)
    for tau in fan.cones_containing(cone):
        total = total + mock_hirzebruch(fan, tau).specialize(1)
    return total


def mock_t_class(fan: Fan) -> CycleClass:
    """Mock T-class: sum over all cones of the y = 1 mock class of V_tau."""
    return mock_t_class_of_orbit(fan, ())


def t_class_corrected(fan: Fan) -> CycleClass:
    """
    sum_{sigma in {0} and singular} A_1(sigma) ∩ mock_t_class_of_orbit(sigma),
    with A_1(0) = 1.
    """
    def term(cone: Cone) -> CycleClass:
        base = mock_t_class_of_orbit(fan, cone)
        if not cone:
            return base
        return cohom_cap(correction_series(fan, cone).specialize(1), base)

    total = CycleClass.zero(fan)
    for part in parallel_map(term, [()] + fan.singular_cones):
        total = total + part
    return total


def half_shifted_orbit_class(fan: Fan, cone: Cone) -> CycleClass:
    """(1/2)^(dim tau) prod_{rho not in tau} (T(x_rho) - x_rho / 2) ∩ [V_tau]."""
    order = fan.rank
    regular = trivial_factor(TODD_HALF_SHIFTED, order)
    factors = [
        CohomExpression.univariate(ray, regular, order)
        for ray in range(len(fan.rays))
        if ray not in cone and fan.has_cone(cone + (ray,))
    ]
    return cohom_cap(product(factors, order), CycleClass.orbit(fan, cone, Fraction(1, 2 ** len(cone))))


def todd_euler_maclaurin(fan: Fan) -> CycleClass:
    """
    Todd class as sum_sigma alpha(sigma) ∩ sum_{tau containing sigma} half-shifted class of V_tau.

    Only the zero cone and singular cones have nonzero alpha.
    """
    def term(cone: Cone) -> CycleClass:
        inner = CycleClass.zero(fan)
        for tau in fan.cones_containing(cone):
            inner = inner + half_shifted_orbit_class(fan, tau)
        return cohom_cap(alpha_series(fan, cone), inner)

    total = CycleClass.zero(fan)
    for part in parallel_map(term, [()] + fan.singular_cones):
        total = total + part
    return total


def orbit_l_class_from_todd(fan: Fan) -> CycleClass:
    """sum_sigma (-1)^d (-2)^(dim O_sigma) td_*(V_sigma); equals T_1(X)."""
    sign = (-1) ** fan.rank
    return orbit_sum(
        fan, lambda c: star_todd(fan, c).scale(Fraction(sign * (-2) ** fan.orbit_dimension(c)))
    )


def orbit_l_class_from_dual_todd(fan: Fan) -> CycleClass:
    """sum_sigma (-2)^(dim O_sigma) td_*(V_sigma) with each td dualized; equals T_1(X)."""
    return orbit_sum(
        fan, lambda c: star_todd(fan, c).dual().scale(Fraction((-2) ** fan.orbit_dimension(c)))
    )


@dataclass
class TClassSuite:
    """T-class, mock T-class and the half-weight corrections of a fan."""

    t_class: CycleClass
    mock_t_class: CycleClass
    alpha: Dict[Cone, CohomExpression] = field(default_factory=dict)


def t_class_suite(fan: Fan) -> TClassSuite:
    """Assemble the T-class data of a simplicial fan."""
    alpha = {cone: alpha_series(fan, cone) for cone in [()] + fan.singular_cones}
    return TClassSuite(t_class(fan), mock_t_class(fan), alpha)
