"""
Univariate power series behind the class formulas.

Every per-ray factor has the shape

    x * (n0 + n1 * a * e^{-c x}) / (1 - a * e^{-c x})

for a character value a (a root of unity) and parameters n0, n1, c in
Q(y). For a = 1 the factor is regular at x = 0 and is expanded through
the Todd series T(x) = x / (1 - e^{-x}).
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

from sympy import QQ
from sympy.polys.ring_series import rs_exp, rs_series_inversion
from sympy.polys.rings import ring

from scalars import CyclotomicScalar, YPolynomial, YRational, as_yrational
from scalars.polynomial import from_qq

X_RING, _x = ring("x", QQ)


@lru_cache(maxsize=128)
def todd_series(order: int) -> Tuple[Fraction, ...]:
    """
    Coefficients b_0..b_order of T(x) = x / (1 - e^{-x}).

    Computed in QQ[[x]] by inverting (1 - e^{-x}) / x.
    """
    shifted = (1 - rs_exp(-_x, _x, order + 2)).quo_term(((1,), QQ.one))
    series = rs_series_inversion(shifted, _x, order + 1)
    return tuple(from_qq(series.get((k,), QQ.zero)) for k in range(order + 1))


def series_inverse(coefficients: List, order: int, one) -> List:
    """
    Inverse of a power series with invertible constant term, to x^order.

    Args:
        coefficients: f_0, f_1, ... (missing entries are zero)
        order: Truncation order
        one: Multiplicative identity of the scalar ring

    Returns:
        g_0..g_order with f * g = 1
    """
    f0_inverse = _inverse(coefficients[0])
    g = [f0_inverse]
    for k in range(1, order + 1):
        total = None
        for j in range(1, min(k, len(coefficients) - 1) + 1):
            term = coefficients[j] * g[k - j]
            total = term if total is None else total + term
        g.append(-(total * f0_inverse) if total is not None else one * 0)
    return g


def _inverse(value):
    if isinstance(value, (int, Fraction)):
        return Fraction(1) / value
    return value.inverse()


@dataclass(frozen=True)
class SeriesKind:
    """Parameters (n0, n1, c) of a per-ray factor."""

    name: str
    n0: YRational
    n1: YRational
    c: YRational

    @classmethod
    def of(cls, name: str, n0, n1, c) -> "SeriesKind":
        return cls(name, as_yrational(n0), as_yrational(n1), as_yrational(c))


_Y = YPolynomial.y()

TODD = SeriesKind.of("todd", 1, 0, 1)
TODD_OMEGA = SeriesKind.of("todd_omega", 0, 1, 1)
HIRZEBRUCH_NORMALIZED = SeriesKind.of("hirzebruch_normalized", 1, _Y, _Y + 1)
HIRZEBRUCH_UNNORMALIZED = SeriesKind.of("hirzebruch_unnormalized", 1, _Y, 1)
ALPHA = SeriesKind.of("alpha", 1, 1, 1)
TODD_HALF_SHIFTED = SeriesKind.of("todd_half_shifted", Fraction(1, 2), Fraction(1, 2), 1)


def _twisted_ratio(kind: SeriesKind, a: CyclotomicScalar, order: int) -> List[CyclotomicScalar]:
    # (n0 + n1) / (1 - a e^{-cx}) - n1
    f = [1 - a]
    power = YRational(1)
    for k in range(1, order + 1):
        power = power * (-kind.c)
        f.append(-(a * (power * Fraction(1, math.factorial(k)))))
    g = series_inverse(f, order, CyclotomicScalar.constant(a.order, 1))
    total = kind.n0 + kind.n1
    out = [gk * total for gk in g]
    out[0] = out[0] - kind.n1
    return out


def twisted_ratio(kind: SeriesKind, a: CyclotomicScalar, order: int) -> List[CyclotomicScalar]:
    """
    Coefficients of (n0 + n1 a e^{-cx}) / (1 - a e^{-cx}) for a != 1.

    Args:
        kind: Series parameters
        a: Character value, a nontrivial root of unity
        order: Truncation order

    Returns:
        Coefficients of x^0..x^order
    """
    if a.is_rational() and a.rational_part() == 1:
        raise ValueError("twisted series needs a nontrivial character")
    return _twisted_ratio(kind, a, order)


def twisted_factor(kind: SeriesKind, a: CyclotomicScalar, order: int) -> List[CyclotomicScalar]:
    """x times twisted_ratio, truncated at x^order."""
    if order == 0:
        return [CyclotomicScalar.constant(a.order, 0)]
    ratio = twisted_ratio(kind, a, order - 1)
    return [CyclotomicScalar.constant(a.order, 0)] + ratio


@lru_cache(maxsize=128)
def trivial_factor(kind: SeriesKind, order: int) -> Tuple[YRational, ...]:
    """
    Coefficients of the a = 1 factor ((n0 + n1) / c) T(c x) - n1 x.

    The k-th coefficient is (n0 + n1) b_k c^(k-1), with -n1 added at k = 1.
    """
    b = todd_series(order)
    total = kind.n0 + kind.n1
    out = []
    for k in range(order + 1):
        out.append(total * kind.c ** (k - 1) * b[k])
    if order >= 1:
        out[1] = out[1] - kind.n1
    return tuple(out)

