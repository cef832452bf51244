"""
Characteristic classes through the Lefschetz-Riemann-Roch sum.

The global group sum is organized per cone: for each cone sigma and each
g in G_sigma with no trivial character on sigma, the rays of sigma get
the twisted factor with a = a_rho(g) and all other rays the regular
a = 1 factor. The per-cone sum is Galois stable and is rationalized
before the cones are added up.
"""

from typing import List

from errors import NotDivisible
from fan import Cone, Fan, cone_label, span_reduction
from intersect import CohomExpression, CycleClass, cohom_cap, product
from scalars import YRational, exact_divide_by_unit_power
from utils.helpers import parallel_map
from utils.logger import LogBlock, logger
from .series import (
    HIRZEBRUCH_NORMALIZED,
    HIRZEBRUCH_UNNORMALIZED,
    TODD,
    TODD_OMEGA,
    SeriesKind,
    trivial_factor,
    twisted_factor,
)


def interior_cone_sum(fan: Fan, cone: Cone, kind: SeriesKind, order: int) -> CohomExpression:
    """
    sum_{g in G_sigma interior} prod_{rho in sigma} twisted factor(x_rho, a_rho(g)).

    Args:
        fan: Simplicial fan
        cone: Cone sigma
        kind: Series parameters
        order: Truncation order

    Returns:
        Rational expression in the rays of sigma

    Raises:
        NotRational: If the character sum does not collapse
    """
    group = fan.cone_group(cone)
    total = CohomExpression({}, order)
    for element in group.interior_elements:
        factors = [
            CohomExpression.univariate(ray, twisted_factor(kind, element.character(pos), order), order)
            for pos, ray in enumerate(cone)
        ]
        total = total + product(factors, order)
    return total.rationalize()


def cone_contribution(fan: Fan, cone: Cone, kind: SeriesKind) -> CohomExpression:
    """Per-cone summand: the interior sum times regular factors off sigma."""
    order = fan.rank
    regular = trivial_factor(kind, order)
    others = [
        CohomExpression.univariate(ray, regular, order)
        for ray in range(len(fan.rays)) if ray not in cone
    ]
    return interior_cone_sum(fan, cone, kind, order) * product(others, order)


def lefschetz_expression(fan: Fan, kind: SeriesKind) -> CohomExpression:
    """The full group sum as one expression in the ray variables."""
    cones: List[Cone] = [c for c in fan.cones if fan.cone_group(c).interior_elements]
    logger.debug(f"{kind.name}: {len(cones)} cones with interior group elements")
    parts = parallel_map(lambda c: cone_contribution(fan, c, kind), cones)
    total = CohomExpression({}, fan.rank)
    for part in parts:
        total = total + part
    return total


def lefschetz_class(fan: Fan, kind: SeriesKind) -> CycleClass:
    """
    Class of the given series kind, capped with [X].

    Computed on the core fan of the ray span and read back on the
    ambient fan. The un-normalized Hirzebruch kind carries the prefactor
    (1 + y)^(d - n) and the torus factor (1 + y)^r.

    Args:
        fan: Simplicial fan
        kind: Series parameters

    Returns:
        CycleClass on fan

    Raises:
        NotRational: If a character sum does not collapse
        NotPolynomial: If an un-normalized coefficient is not polynomial
    """
    with LogBlock(f"lefschetz class {kind.name}", level="DEBUG"):
        core, torus_rank = span_reduction(fan)
        expression = lefschetz_expression(core, kind)
        cycle = cohom_cap(expression, CycleClass.fundamental(core))

        if kind is HIRZEBRUCH_UNNORMALIZED:
            prefactor = YRational.unit_power(core.rank - len(core.rays) + torus_rank)
            cycle = cycle.scale(prefactor).map(lambda c, v: v.to_polynomial())

        return cycle.on_fan(fan)


def todd_lrr(fan: Fan) -> CycleClass:
    """Todd class td_*(X)."""
    return lefschetz_class(fan, TODD)


def todd_omega(fan: Fan) -> CycleClass:
    """Todd class of the canonical sheaf, td_*([omega_X])."""
    return lefschetz_class(fan, TODD_OMEGA)


def hirzebruch_class(fan: Fan, normalized: bool = True) -> CycleClass:
    """
    Hirzebruch class, normalized T-hat_y or un-normalized T_y.

    Coefficients are polynomials in y.
    """
    if normalized:
        return lefschetz_class(fan, HIRZEBRUCH_NORMALIZED)
    return lefschetz_class(fan, HIRZEBRUCH_UNNORMALIZED)


def normalize_class(cycle: CycleClass) -> CycleClass:
    """
    Divide the degree-k component exactly by (1 + y)^k.

    Raises:
        NotPolynomial: If a coefficient is not a polynomial
        NotDivisible: If a component is not divisible
    """
    def divide(cone: Cone, value: YRational):
        k = cycle.orbit_dim(cone)
        try:
            return exact_divide_by_unit_power(value.to_polynomial(), k)
        except NotDivisible as exc:
            exc.detail["cone"] = list(cone)
            exc.message = f"{exc.message} on {cone_label(cycle.fan, cone)}"
            raise

    return cycle.map(divide)
