"""
Cyclotomic scalars: elements of Q(zeta_N)(y) reduced modulo Phi_N.

Characters of the finite groups attached to simplicial cones are roots
of unity; the Lefschetz sums are carried out here and brought back to
Q(y) with rational_part once a full Galois-stable sum is formed.

A value is a polynomial in z over the rational function field Q(y),
kept reduced modulo the cyclotomic polynomial Phi_N(z).
"""

from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Tuple

from sympy import Symbol, cyclotomic_poly, totient
from sympy.polys.rings import PolyElement, ring

from errors import NotRational
from .polynomial import YPolynomial
from .rational_function import Y_FIELD, YRational, as_yrational

Z_RING, _z = ring("z", Y_FIELD.to_domain())


@lru_cache(maxsize=64)
def cyclotomic_polynomial(order: int) -> Tuple[int, ...]:
    """
    The N-th cyclotomic polynomial.

    Args:
        order: N >= 1

    Returns:
        Integer coefficients in ascending powers, e.g. (1, -1, 1) for N = 6
    """
    if order < 1:
        raise ValueError("cyclotomic order must be positive")
    poly = cyclotomic_poly(order, Symbol("z"), polys=True)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


@lru_cache(maxsize=64)
def euler_phi(order: int) -> int:
    return int(totient(order))


@lru_cache(maxsize=64)
def _modulus(order: int) -> PolyElement:
    """Phi_N as an element of Z_RING."""
    return Z_RING.from_dict(
        {(power,): c for power, c in enumerate(cyclotomic_polynomial(order)) if c}
    )


class CyclotomicScalar:
    """
    Immutable element of Q(zeta_N)(y).

    value = sum_i coeffs[i] * zeta^i with coeffs in YRational and
    i < phi(N).
    """

    __slots__ = ("order", "poly")

    def __init__(self, order: int, coefficients: Sequence = ()):
        self.order = order
        poly = Z_RING.from_dict(
            {(power,): as_yrational(c).frac for power, c in enumerate(coefficients) if c != 0}
        )
        self.poly: PolyElement = poly.rem(_modulus(order))

    @classmethod
    def wrap(cls, order: int, poly: PolyElement) -> "CyclotomicScalar":
        """Wrap an element of Z_RING already reduced modulo Phi_N."""
        value = cls.__new__(cls)
        value.order = order
        value.poly = poly
        return value

    @classmethod
    def constant(cls, order: int, value) -> "CyclotomicScalar":
        return cls.wrap(order, Z_RING.ground_new(as_yrational(value).frac))

    # Queries

    @property
    def phi(self) -> int:
        return euler_phi(self.order)

    @property
    def coeffs(self) -> Tuple[YRational, ...]:
        zero = Y_FIELD.zero
        return tuple(YRational.wrap(self.poly.get((i,), zero)) for i in range(self.phi))

    def is_zero(self) -> bool:
        return not self.poly

    def is_rational(self) -> bool:
        return all(monom == (0,) for monom in self.poly)

    def rational_part(self) -> YRational:
        """
        Return the value as an element of Q(y).

        Raises:
            NotRational: If a positive power of zeta survives reduction
        """
        if not self.is_rational():
            raise NotRational(
                f"cyclotomic value of order {self.order} is not rational: {self}",
                {"order": self.order, "value": str(self)},
            )
        return YRational.wrap(self.poly.get((0,), Y_FIELD.zero))

    # Arithmetic

    def _coerce(self, other) -> "CyclotomicScalar":
        if isinstance(other, CyclotomicScalar):
            if other.order != self.order:
                raise ValueError(
                    f"cannot combine cyclotomic orders {self.order} and {other.order}"
                )
            return other
        if isinstance(other, (int, Fraction, YPolynomial, YRational)):
            return CyclotomicScalar.constant(self.order, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CyclotomicScalar.wrap(self.order, self.poly + other.poly)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicScalar.wrap(self.order, -self.poly)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CyclotomicScalar.wrap(self.order, self.poly - other.poly)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CyclotomicScalar.wrap(self.order, other.poly - self.poly)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        product = self.poly * other.poly
        if not other.is_rational() and not self.is_rational():
            product = product.rem(_modulus(self.order))
        return CyclotomicScalar.wrap(self.order, product)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicScalar":
        """
        Field inverse modulo Phi_N.

        Raises:
            ZeroDivisionError: If the value is zero
        """
        if self.is_zero():
            raise ZeroDivisionError("Inverse of zero cyclotomic scalar")
        if self.is_rational():
            return CyclotomicScalar.constant(self.order, self.rational_part().inverse())
        return CyclotomicScalar.wrap(self.order, Z_RING.dup_invert(self.poly, _modulus(self.order)))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CyclotomicScalar.constant(self.order, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # Comparison and rendering

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except ValueError:
            return False
        if other is NotImplemented:
            return NotImplemented
        return self.poly == other.poly

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            monomial = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if not monomial:
                terms.append(f"({c})")
            else:
                terms.append(f"({c})*{monomial}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return f"CyclotomicScalar(order={self.order}, {self})"


def root_of_unity(order: int, power: int) -> CyclotomicScalar:
    """
    zeta_N^k reduced modulo Phi_N.

    Args:
        order: N
        power: k (any integer)

    Returns:
        The root of unity as a cyclotomic scalar of order N
    """
    return CyclotomicScalar.wrap(order, (_z ** (power % order)).rem(_modulus(order)))
