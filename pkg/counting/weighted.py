"""
Weighted lattice-point counting identities.

standard: sum_{Q in P'} (1+y)^(dim Q) |Relint Q ∩ M| = deg(ch(O(D_P)) ∩ T_y(X_{P'}))
dual:     sum_{Q in P} (-1/2)^(codim Q) |Q ∩ M|      = deg(ch(O(D_P)) ∩ (1/2)^d T_1(X_P))
half:     sum_{Q in P'} (1/2)^(codim Q) |Relint Q ∩ M| = deg(ch(O(D_P)) ∩ (1/2)^d T_1(X_{P'}))
"""

from fractions import Fraction
from typing import Literal, Optional

from classes import orbit_classes_subset
from errors import InvalidInputError
from intersect import CycleClass, cohom_cap, degree, exp_divisor
from polytope import (
    LatticePolytope,
    PolytopalSubcomplex,
    count_lattice_points,
    normal_fan,
    polytope_divisor,
    relint_counts,
    whole,
)
from scalars import YPolynomial
from schemas.reports import WeightedCountReport
from utils.logger import logger

WeightMode = Literal["standard", "dual", "half"]


def divisor_degree(polytope: LatticePolytope, cycle: CycleClass) -> YPolynomial:
    """deg(ch(O(D_P)) ∩ cycle) on the normal fan."""
    expression = exp_divisor(polytope_divisor(polytope), cycle.fan.rank)
    return degree(cohom_cap(expression, cycle)).to_polynomial()


def weighted_face_sum(complex_: PolytopalSubcomplex) -> YPolynomial:
    """sum_{Q in P'} (1+y)^(dim Q) |Relint Q ∩ M|."""
    counts = relint_counts(complex_.polytope, 1)
    total = YPolynomial()
    for face in complex_:
        total = total + YPolynomial.one_plus_y(face.dimension) * counts[face]
    return total


def _half_weight_sum(complex_: PolytopalSubcomplex) -> Fraction:
    d = complex_.polytope.rank
    counts = relint_counts(complex_.polytope, 1)
    return sum((Fraction(1, 2 ** (d - f.dimension)) * counts[f] for f in complex_), Fraction(0))


def _dual_weight_sum(polytope: LatticePolytope) -> Fraction:
    d = polytope.rank
    return sum(
        (Fraction(-1, 2) ** (d - f.dimension) * count_lattice_points(polytope, 1, face=f) for f in polytope.faces),
        Fraction(0),
    )


def weighted_count_identity(
    polytope: LatticePolytope,
    complex_: Optional[PolytopalSubcomplex] = None,
    mode: WeightMode = "standard",
) -> WeightedCountReport:
    """
    Evaluate both sides of a weighted counting identity.

    Args:
        polytope: Simple lattice polytope
        complex_: Polytopal subcomplex, default P itself
        mode: "standard", "dual" or "half"

    Returns:
        WeightedCountReport

    Raises:
        NotSimple: If the class side is unavailable
        InvalidInputError: For dual mode on a proper subcomplex
    """
    target = complex_ if complex_ is not None else whole(polytope)
    if mode == "dual" and not target.is_full:
        raise InvalidInputError("dual mode applies to the whole polytope", {"mode": mode})

    fan = normal_fan(polytope).fan
    subset = target.cone_subset()
    d = polytope.rank

    if mode == "standard":
        lhs = weighted_face_sum(target)
        rhs = divisor_degree(polytope, orbit_classes_subset(fan, subset, normalized=False))
    else:
        l_class = orbit_classes_subset(fan, subset, normalized=False).specialize(1)
        rhs = divisor_degree(polytope, l_class.scale(Fraction(1, 2 ** d)))
        lhs = YPolynomial.constant(_dual_weight_sum(polytope) if mode == "dual" else _half_weight_sum(target))

    equal = lhs == rhs
    logger.info(f"weighted count ({mode}): lhs={lhs} rhs={rhs}")
    return WeightedCountReport(
        mode=mode,
        subcomplex=not target.is_full,
        lhs=lhs,
        rhs=rhs,
        equal=equal,
    )
