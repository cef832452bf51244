"""
Mock classes and singular-cone corrections.

The mock Hirzebruch class is what the class would be if X were smooth:
the product of the regular per-ray series capped with [X] (or with an
orbit closure). Each singular cone sigma contributes a correction
series A_y(sigma) that multiplies the pushed-forward mock class of V_sigma.
"""

from fractions import Fraction
from typing import Optional

from errors import InvalidFanData
from fan import Cone, Fan, cone_label
from intersect import CohomExpression, CycleClass, cohom_cap, product
from scalars import CyclotomicScalar, YPolynomial, YRational, root_of_unity
from utils.helpers import parallel_map
from .series import ALPHA, HIRZEBRUCH_NORMALIZED, SeriesKind, trivial_factor, twisted_ratio


def mock_hirzebruch(fan: Fan, cone: Optional[Cone] = None) -> CycleClass:
    """
    Normalized mock Hirzebruch class of X, or of the orbit closure V_sigma.

    Args:
        fan: Simplicial fan
        cone: Optional cone sigma; None means the zero cone

    Returns:
        (prod_{rho not in sigma} Q-hat_y(x_rho)) ∩ [V_sigma]
    """
    cone = fan.check_cone(cone or ())
    order = fan.rank
    regular = trivial_factor(HIRZEBRUCH_NORMALIZED, order)
    factors = [
        CohomExpression.univariate(ray, regular, order)
        for ray in range(len(fan.rays))
        if ray not in cone and fan.has_cone(cone + (ray,))
    ]
    return cohom_cap(product(factors, order), CycleClass.orbit(fan, cone))


def mock_chern(fan: Fan) -> CycleClass:
    """sum_sigma (1 / mult sigma) [V_sigma]."""
    return CycleClass(fan, {c: Fraction(1, fan.multiplicity(c)) for c in fan.cones})


def cone_correction(fan: Fan, cone: Cone, kind: SeriesKind) -> CohomExpression:
    """
    (1 / mult sigma) sum_{g in G_sigma interior} prod_{rho in sigma} ratio(x_rho, a_rho(g)).

    Raises:
        InvalidFanData: If the cone is smooth
        NotRational: If the character sum does not collapse
    """
    cone = fan.check_cone(cone)
    mult = fan.multiplicity(cone)
    if mult == 1:
        raise InvalidFanData(
            f"{cone_label(fan, cone)} is smooth and has no correction",
            {"cone": list(cone)},
        )

    order = fan.rank
    total = CohomExpression({}, order)
    for element in fan.cone_group(cone).interior_elements:
        factors = [
            CohomExpression.univariate(ray, twisted_ratio(kind, element.character(pos), order), order)
            for pos, ray in enumerate(cone)
        ]
        total = total + product(factors, order)
    return total.rationalize() * Fraction(1, mult)


def correction_series(fan: Fan, cone: Cone) -> CohomExpression:
    """
    Correction A_y(sigma) of a singular cone.

    Args:
        fan: Simplicial fan
        cone: Singular cone sigma

    Returns:
        Truncated expression with coefficients in Q[y]
    """
    return cone_correction(fan, cone, HIRZEBRUCH_NORMALIZED)


def alpha_series(fan: Fan, cone: Cone) -> CohomExpression:
    """
    Half-weight correction alpha(sigma).

    alpha(0) = 1, alpha of a smooth nonzero cone is 0, and a singular
    cone gets A_1(sigma) with x_rho -> x_rho / 2.
    """
    cone = fan.check_cone(cone)
    if not cone:
        return CohomExpression.one(fan.rank)
    if fan.multiplicity(cone) == 1:
        return CohomExpression({}, fan.rank)
    return cone_correction(fan, cone, ALPHA)


def top_contribution(fan: Fan, cone: Cone) -> YRational:
    """
    Degree-zero term of A_y(sigma):
    (1 / mult) sum_g prod_{rho in sigma} (1 + y a_rho(g)) / (1 - a_rho(g)).
    """
    return correction_series(fan, cone).constant_term()


def hirzebruch_decomposed(fan: Fan) -> CycleClass:
    """
    Mock class plus the singular-cone corrections:
    T-hat_y = mock + sum_{sigma singular} A_y(sigma) ∩ mock(V_sigma).
    """
    def correction(cone: Cone) -> CycleClass:
        return cohom_cap(correction_series(fan, cone), mock_hirzebruch(fan, cone))

    total = mock_hirzebruch(fan)
    for part in parallel_map(correction, fan.singular_cones):
        total = total + part
    return total


def weighted_projective_correction(order: int, dimension: int) -> YPolynomial:
    """
    (1 / m) sum_{lambda^m = 1, lambda != 1} ((1 + lambda y) / (1 - lambda))^d.

    The point correction of the isolated singular point of the
    weighted projective space P(1, ..., 1, m).

    Args:
        order: m >= 1
        dimension: d

    Returns:
        Exact polynomial in y
    """
    if order < 1:
        raise ValueError("order must be positive")
    y = YPolynomial.y()
    total = CyclotomicScalar.constant(order, 0)
    for k in range(1, order):
        zeta = root_of_unity(order, k)
        total = total + ((zeta * y + 1) / (1 - zeta)) ** dimension
    return (total.rational_part() * Fraction(1, order)).to_polynomial()
