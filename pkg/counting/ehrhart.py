"""
Ehrhart polynomials from Todd classes, checked against brute force.

a_k = (1/k!) deg(D_P^k ∩ td_k) with td the Todd class of X_P, or of the
closed subset X_{P'} for a polytopal subcomplex.
"""

import math
from fractions import Fraction
from typing import List, Optional

from classes import todd_lrr, todd_omega, todd_subset
from config import settings
from errors import InvalidInputError
from intersect import CycleClass, DivisorClass, cohom_cap, degree, exp_divisor
from polytope import (
    LatticePolytope,
    PolytopalSubcomplex,
    count_lattice_points,
    count_union,
    euler_characteristic,
    interior_count,
    normal_fan,
    polytope_divisor,
)
from scalars import YRational
from schemas.reports import EhrhartResult, EhrhartRow, ReciprocityRow
from utils.helpers import parallel_map
from utils.logger import LogBlock, logger
from utils.validators import validate_max_dilate


def _as_fraction(value: YRational) -> Fraction:
    return value.to_polynomial().constant_term()


def ehrhart_coefficients(divisor: DivisorClass, todd: CycleClass) -> List[Fraction]:
    """a_0..a_d with a_k = (1/k!) deg(D^k ∩ td_k)."""
    d = todd.fan.rank
    expression = divisor.to_expression(d)
    coefficients = []
    for k in range(d + 1):
        capped = cohom_cap(expression.power(k), todd.component(k))
        coefficients.append(_as_fraction(degree(capped)) / math.factorial(k))
    return coefficients


def evaluate(coefficients: List[Fraction], ell: int) -> Fraction:
    """Value of sum_k a_k l^k."""
    return sum((a * Fraction(ell) ** k for k, a in enumerate(coefficients)), Fraction(0))


def ehrhart_bruteforce(polytope: LatticePolytope, max_dilate: int) -> List[int]:
    """|l P ∩ M| for l = 0..max_dilate, one scan per dilation."""
    return parallel_map(lambda ell: count_lattice_points(polytope, ell), range(max_dilate + 1))


def _check_dilate(max_dilate: Optional[int]) -> int:
    if max_dilate is None:
        return 0
    valid, message = validate_max_dilate(max_dilate)
    if not valid:
        raise InvalidInputError(message, {"max_dilate": max_dilate})
    return max_dilate


def ehrhart_via_classes(polytope: LatticePolytope, max_dilate: Optional[int] = None) -> EhrhartResult:
    """
    Ehrhart polynomial of P from the Todd class of its normal fan.

    Residuals are checked for l = 0..max(max_dilate, d + 2) and
    reciprocity (-1)^d Ehr(-l) = |Int(lP) ∩ M| for l = 1..reciprocity_dilations.

    Args:
        polytope: Simple lattice polytope
        max_dilate: Largest dilation of the residual table

    Returns:
        EhrhartResult

    Raises:
        NotSimple: If the normal fan is not simplicial
    """
    top = max(_check_dilate(max_dilate), polytope.rank + 2)
    with LogBlock("ehrhart via classes"):
        fan = normal_fan(polytope).fan
        coefficients = ehrhart_coefficients(polytope_divisor(polytope), todd_lrr(fan))

        counts = ehrhart_bruteforce(polytope, top)
        rows = [
            EhrhartRow(dilation=ell, count=count, value=evaluate(coefficients, ell),
                       residual=count - evaluate(coefficients, ell))
            for ell, count in enumerate(counts)
        ]

        sign = (-1) ** polytope.rank
        reciprocity = [
            ReciprocityRow(dilation=ell, interior_count=interior_count(polytope, ell),
                           value=sign * evaluate(coefficients, -ell))
            for ell in range(1, settings.reciprocity_dilations + 1)
        ]

    passed = all(r.residual == 0 for r in rows) and all(r.value == r.interior_count for r in reciprocity)
    if not passed:
        logger.warning("Ehrhart residuals or reciprocity failed")
    return EhrhartResult(
        coefficients=coefficients,
        rows=rows,
        reciprocity=reciprocity,
        subcomplex=False,
        euler_characteristic=1,
        passed=passed,
    )


def ehrhart_subcomplex(complex_: PolytopalSubcomplex, max_dilate: Optional[int] = None) -> EhrhartResult:
    """
    Ehrhart polynomial of a polytopal subcomplex P'.

    td(X_{P'}) comes from the orbit path at y = 0. Counts are compared for
    l >= 1; at l = 0 the union is a single point while a_0 must equal chi(P').
    """
    polytope = complex_.polytope
    top = max(_check_dilate(max_dilate), polytope.rank + 2)
    with LogBlock("ehrhart of subcomplex"):
        fan = normal_fan(polytope).fan
        todd = todd_subset(fan, complex_.cone_subset())
        coefficients = ehrhart_coefficients(polytope_divisor(polytope), todd)

        counts = parallel_map(lambda ell: count_union(polytope, complex_, ell), range(1, top + 1))
        rows = [
            EhrhartRow(dilation=ell, count=count, value=evaluate(coefficients, ell),
                       residual=count - evaluate(coefficients, ell))
            for ell, count in enumerate(counts, start=1)
        ]

    chi = euler_characteristic(complex_)
    passed = all(r.residual == 0 for r in rows) and coefficients[0] == chi
    return EhrhartResult(
        coefficients=coefficients,
        rows=rows,
        subcomplex=True,
        euler_characteristic=chi,
        passed=passed,
    )


def interior_count_via_dual_todd(polytope: LatticePolytope) -> Fraction:
    """deg(ch(O(D_P)) ∩ td([omega])), which counts Int(P) ∩ M."""
    fan = normal_fan(polytope).fan
    expression = exp_divisor(polytope_divisor(polytope), fan.rank)
    return _as_fraction(degree(cohom_cap(expression, todd_omega(fan))))
