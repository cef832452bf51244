"""
Exact scalar arithmetic for the class engine.

This package provides:
- YPolynomial: polynomials in y over the rationals
- YRational: rational functions in y
- CyclotomicScalar: values in Q(zeta_N)(y) for root-of-unity character sums

All three wrap sympy polynomial rings and fields over QQ.
"""

from fractions import Fraction as Rational

from .polynomial import YPolynomial, specialize
from .rational_function import YRational, as_yrational, exact_divide_by_unit_power
from .cyclotomic import CyclotomicScalar, cyclotomic_polynomial, euler_phi, root_of_unity


def rational_part(value: CyclotomicScalar) -> YRational:
    """Module-level form of CyclotomicScalar.rational_part."""
    return value.rational_part()


__all__ = [
    "Rational",
    "YPolynomial",
    "YRational",
    "CyclotomicScalar",
    "as_yrational",
    "cyclotomic_polynomial",
    "euler_phi",
    "exact_divide_by_unit_power",
    "rational_part",
    "root_of_unity",
    "specialize",
]
