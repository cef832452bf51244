"""
Rational functions in y: the fraction field of YPolynomial.
"""

from fractions import Fraction
from typing import Union

from sympy.polys.fields import FracElement

from errors import NotDivisible, NotPolynomial
from .polynomial import Y_RING, YPolynomial, from_qq, to_qq

Scalar = Union[int, Fraction]

Y_FIELD = Y_RING.to_field()


class YRational:
    """
    Immutable element of Q(y), backed by sympy's rational function field.

    The field keeps numerator and denominator coprime; numerator and
    denominator are reported with a monic denominator.
    """

    __slots__ = ("frac",)

    def __init__(self, numerator=0, denominator=1):
        num = _as_polynomial(numerator).poly
        den = _as_polynomial(denominator).poly
        if not den:
            raise ZeroDivisionError("YRational with zero denominator")
        self.frac: FracElement = Y_FIELD.new(num, den)

    @classmethod
    def wrap(cls, frac: FracElement) -> "YRational":
        value = cls.__new__(cls)
        value.frac = frac
        return value

    # Constructors

    @classmethod
    def from_polynomial(cls, p: YPolynomial) -> "YRational":
        return cls.wrap(Y_FIELD.new(p.poly))

    @classmethod
    def unit_power(cls, exponent: int) -> "YRational":
        """(1 + y)^exponent for any integer exponent."""
        return cls.from_polynomial(YPolynomial.one_plus_y(1)) ** exponent

    # Queries

    @property
    def numerator(self) -> YPolynomial:
        return YPolynomial.wrap(self.frac.numer.quo_ground(self.frac.denom.LC))

    @property
    def denominator(self) -> YPolynomial:
        return YPolynomial.wrap(self.frac.denom.monic())

    def is_polynomial(self) -> bool:
        return self.frac.denom.degree() <= 0

    def is_zero(self) -> bool:
        return not self.frac

    def to_polynomial(self) -> YPolynomial:
        """
        Convert to a polynomial.

        Raises:
            NotPolynomial: If the denominator is not constant
        """
        if not self.is_polynomial():
            raise NotPolynomial(
                f"expected a polynomial in y, got {self}",
                {"value": str(self)},
            )
        return self.numerator

    def evaluate(self, y: Scalar) -> Fraction:
        point = to_qq(y)
        den = from_qq(self.frac.denom(point))
        if den == 0:
            raise ZeroDivisionError(f"{self} has a pole at y = {y}")
        return from_qq(self.frac.numer(point)) / den

    # Arithmetic

    @staticmethod
    def _coerce(other) -> "YRational":
        if isinstance(other, YRational):
            return other
        if isinstance(other, YPolynomial):
            return YRational.from_polynomial(other)
        if isinstance(other, (int, Fraction)):
            return YRational.wrap(Y_FIELD.new(Y_RING.ground_new(to_qq(other))))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return YRational.wrap(self.frac + other.frac)

    __radd__ = __add__

    def __neg__(self):
        return YRational.wrap(-self.frac)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return YRational.wrap(self.frac - other.frac)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return YRational.wrap(other.frac - self.frac)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return YRational.wrap(self.frac * other.frac)

    __rmul__ = __mul__

    def inverse(self) -> "YRational":
        if self.is_zero():
            raise ZeroDivisionError("Inverse of zero")
        return YRational.wrap(Y_FIELD.new(self.frac.denom, self.frac.numer))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return YRational.wrap(self.frac ** exponent)

    # Comparison and rendering

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.frac == other.frac

    def __hash__(self):
        return hash(self.frac)

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        if self.is_polynomial():
            return str(self.numerator)
        return f"({self.numerator})/({self.denominator})"

    def __repr__(self):
        return f"YRational({str(self)!r})"


def _as_polynomial(value) -> YPolynomial:
    if isinstance(value, YPolynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return YPolynomial.constant(value)
    raise TypeError(f"Cannot build a polynomial from {type(value).__name__}")


def as_yrational(value) -> YRational:
    """Coerce an int, Fraction, YPolynomial or YRational to YRational."""
    coerced = YRational._coerce(value)
    if coerced is NotImplemented:
        raise TypeError(f"Cannot coerce {type(value).__name__} to YRational")
    return coerced


def exact_divide_by_unit_power(p: YPolynomial, k: int) -> YPolynomial:
    """
    Divide a polynomial exactly by (1 + y)^k.

    Args:
        p: Polynomial to divide
        k: Nonnegative exponent

    Returns:
        q with q * (1 + y)^k == p

    Raises:
        NotDivisible: If a remainder survives
    """
    if k < 0:
        raise ValueError("exponent must be nonnegative")

    unit = YPolynomial.one_plus_y(1).poly
    q = p.poly
    for step in range(k):
        if not q:
            break
        q, remainder = q.div(unit)
        if remainder:
            raise NotDivisible(
                f"{p} is not divisible by (1 + y)^{k}",
                {"polynomial": str(p), "exponent": k, "failed_at": step + 1},
            )
    return YPolynomial.wrap(q)
