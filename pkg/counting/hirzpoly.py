"""
Hirzebruch polynomials chi_y(X, O(D)) = deg(ch(O(D)) ∩ T_y(X)).
"""

from math import comb
from typing import List, Optional

from classes import hirzebruch_class, orbit_classes_subset
from fan import Fan
from intersect import DivisorClass, cohom_cap, degree, exp_divisor
from polytope import (
    LatticePolytope,
    PolytopalSubcomplex,
    faces_by_dimension,
    normal_fan,
    polytope_divisor,
    relint_counts,
    whole,
)
from scalars import YPolynomial
from schemas.reports import HirzebruchPolynomialReport, IshidaEntry
from .weighted import weighted_face_sum


def hirzebruch_polynomial_of_divisor(fan: Fan, divisor: DivisorClass) -> YPolynomial:
    """
    chi_y(X, O(D)) for a divisor on a complete simplicial fan.

    Raises:
        NotComplete: If the fan is not complete
    """
    fan.require_complete("hirzebruch_polynomial")
    expression = exp_divisor(divisor, fan.rank)
    return degree(cohom_cap(expression, hirzebruch_class(fan, normalized=False))).to_polynomial()


def ishida_table(complex_: PolytopalSubcomplex) -> List[IshidaEntry]:
    """chi(X, Omega^p(D)) = sum_{i >= p} C(i, p) sum_{dim Q = i} |Relint Q ∩ M|."""
    counts = relint_counts(complex_.polytope, 1)
    by_dim = [sum(counts[f] for f in group) for group in faces_by_dimension(complex_)]
    return [
        IshidaEntry(p=p, value=sum(comb(i, p) * by_dim[i] for i in range(p, len(by_dim))))
        for p in range(len(by_dim))
    ]


def hirzebruch_polynomial(
    polytope: LatticePolytope,
    complex_: Optional[PolytopalSubcomplex] = None,
) -> HirzebruchPolynomialReport:
    """
    chi_y of O(D_P) on X_P, or restricted to X_{P'}, with its face expansion.

    The whole polytope goes through the Lefschetz class, a subcomplex
    through the orbit decomposition.

    Raises:
        NotSimple: If the normal fan is not simplicial
    """
    fan = normal_fan(polytope).fan
    if complex_ is None or complex_.is_full:
        polynomial = hirzebruch_polynomial_of_divisor(fan, polytope_divisor(polytope))
        complex_ = complex_ if complex_ is not None else whole(polytope)
    else:
        cycle = orbit_classes_subset(fan, complex_.cone_subset(), normalized=False)
        expression = exp_divisor(polytope_divisor(polytope), fan.rank)
        polynomial = degree(cohom_cap(expression, cycle)).to_polynomial()

    combinatorial = weighted_face_sum(complex_)
    table = ishida_table(complex_)
    return HirzebruchPolynomialReport(
        polynomial=polynomial,
        combinatorial=combinatorial,
        equal=polynomial == combinatorial,
        table=table,
        table_matches=all(polynomial.coefficient(e.p) == e.value for e in table),
    )
