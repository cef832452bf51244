"""
Truncated polynomials in the ray variables x_rho.

A CohomExpression maps monomials (sorted tuples of ray indices, with
repetition) to scalars in Q(y) or Q(zeta_N)(y). Monomials of total
degree above the truncation bound are dropped.
"""

import math
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

from scalars import CyclotomicScalar, YRational, as_yrational

Monomial = Tuple[int, ...]


def _scalar(value):
    if isinstance(value, CyclotomicScalar):
        return value
    return as_yrational(value)


def _merge(a: Monomial, b: Monomial) -> Monomial:
    return tuple(sorted(a + b))


class CohomExpression:
    """Immutable truncated expression in the ray variables."""

    __slots__ = ("truncation", "terms")

    def __init__(self, terms: Mapping[Monomial, object], truncation: int):
        self.truncation = truncation
        cleaned = {}
        for monomial, value in terms.items():
            if len(monomial) > truncation:
                continue
            value = _scalar(value)
            if value.is_zero():
                continue
            key = tuple(sorted(monomial))
            cleaned[key] = cleaned[key] + value if key in cleaned else value
        self.terms: Dict[Monomial, object] = {k: v for k, v in cleaned.items() if not v.is_zero()}

    # Constructors

    @classmethod
    def constant(cls, value, truncation: int) -> "CohomExpression":
        return cls({(): value}, truncation)

    @classmethod
    def one(cls, truncation: int) -> "CohomExpression":
        return cls.constant(1, truncation)

    @classmethod
    def variable(cls, ray: int, truncation: int) -> "CohomExpression":
        return cls({(ray,): 1}, truncation)

    @classmethod
    def univariate(cls, ray: int, coefficients: Sequence, truncation: int) -> "CohomExpression":
        """sum_k coefficients[k] * x_ray^k."""
        return cls({(ray,) * k: c for k, c in enumerate(coefficients) if k <= truncation}, truncation)

    # Queries

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> Iterator[Tuple[Monomial, object]]:
        for monomial in sorted(self.terms, key=lambda m: (len(m), m)):
            yield monomial, self.terms[monomial]

    def constant_term(self):
        return self.terms.get((), YRational())

    def component(self, k: int) -> "CohomExpression":
        return CohomExpression({m: v for m, v in self.terms.items() if len(m) == k}, self.truncation)

    def is_rational(self) -> bool:
        return all(not isinstance(v, CyclotomicScalar) or v.is_rational() for v in self.terms.values())

    # Algebra

    def __add__(self, other) -> "CohomExpression":
        if not isinstance(other, CohomExpression):
            other = CohomExpression.constant(other, self.truncation)
        out = dict(self.terms)
        for monomial, value in other.terms.items():
            out[monomial] = out[monomial] + value if monomial in out else value
        return CohomExpression(out, min(self.truncation, other.truncation))

    __radd__ = __add__

    def __neg__(self) -> "CohomExpression":
        return CohomExpression({m: -v for m, v in self.terms.items()}, self.truncation)

    def __sub__(self, other) -> "CohomExpression":
        return self + (-other)

    def __mul__(self, other) -> "CohomExpression":
        if not isinstance(other, CohomExpression):
            factor = _scalar(other)
            return CohomExpression({m: v * factor for m, v in self.terms.items()}, self.truncation)

        bound = min(self.truncation, other.truncation)
        out: Dict[Monomial, object] = {}
        for m1, v1 in self.terms.items():
            for m2, v2 in other.terms.items():
                if len(m1) + len(m2) > bound:
                    continue
                key = _merge(m1, m2)
                value = v1 * v2
                out[key] = out[key] + value if key in out else value
        return CohomExpression(out, bound)

    __rmul__ = __mul__

    def power(self, exponent: int) -> "CohomExpression":
        result = CohomExpression.one(self.truncation)
        for _ in range(exponent):
            result = result * self
        return result

    def substitute_scale(self, factor) -> "CohomExpression":
        """x_rho -> factor * x_rho for every ray."""
        factor = as_yrational(factor)
        return CohomExpression({m: v * factor ** len(m) for m, v in self.terms.items()}, self.truncation)

    def rationalize(self) -> "CohomExpression":
        """
        Replace cyclotomic coefficients by their rational parts.

        Raises:
            NotRational: If a root of unity survives in some coefficient
        """
        return CohomExpression(
            {m: v.rational_part() if isinstance(v, CyclotomicScalar) else v for m, v in self.terms.items()},
            self.truncation,
        )

    def specialize(self, y) -> "CohomExpression":
        y = Fraction(y)
        return CohomExpression({m: v.evaluate(y) for m, v in self.rationalize().terms.items()}, self.truncation)

    def __repr__(self):
        body = " + ".join(f"({v})*x{list(m)}" for m, v in self.items())
        return f"CohomExpression({body or '0'})"


def product(factors: Iterable[CohomExpression], truncation: int) -> CohomExpression:
    """Product of expressions, truncated."""
    result = CohomExpression.one(truncation)
    for factor in factors:
        result = result * factor
    return result


class DivisorClass:
    """A Q-divisor sum_rho c_rho D_rho by ray index."""

    def __init__(self, coefficients: Mapping[int, object]):
        self.coefficients: Dict[int, Fraction] = {
            int(ray): Fraction(c) for ray, c in coefficients.items() if Fraction(c) != 0
        }

    def __mul__(self, factor) -> "DivisorClass":
        return DivisorClass({ray: c * Fraction(factor) for ray, c in self.coefficients.items()})

    __rmul__ = __mul__

    def to_expression(self, truncation: int) -> CohomExpression:
        """The degree-one expression sum_rho c_rho x_rho."""
        return CohomExpression({(ray,): c for ray, c in self.coefficients.items()}, truncation)

    def __repr__(self):
        return f"DivisorClass({self.coefficients})"


def exp_divisor(divisor: DivisorClass, truncation: int) -> CohomExpression:
    """
    ch(O(D)) = sum_{k <= t} D^k / k!.

    Args:
        divisor: The divisor D
        truncation: Degree bound t

    Returns:
        Truncated exponential in the ray variables
    """
    if truncation < 0:
        raise ValueError("truncation must be nonnegative")
    d = divisor.to_expression(truncation)
    result = CohomExpression.one(truncation)
    power = CohomExpression.one(truncation)
    for k in range(1, truncation + 1):
        power = power * d
        result = result + power * Fraction(1, math.factorial(k))
    return result
