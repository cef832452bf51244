"""
Univariate polynomials in y with exact rational coefficients.

YPolynomial is an immutable wrapper around an element of sympy's sparse
polynomial ring QQ[y]; arithmetic, division and gcd run there.
"""

from fractions import Fraction
from typing import Iterable, Tuple, Union

from sympy import QQ, Symbol, SympifyError, sympify
from sympy.polys.rings import PolyElement, ring

from utils.helpers import format_rational

Scalar = Union[int, Fraction]

Y = Symbol("y")
Y_RING, _y = ring("y", QQ)


def to_qq(value: Scalar):
    """Convert an int or Fraction to a QQ element."""
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def from_qq(value) -> Fraction:
    """Convert a QQ element to a Fraction."""
    return Fraction(int(value.numerator), int(value.denominator))


class YPolynomial:
    """
    Immutable polynomial in y over the rationals.

    coeffs lists the coefficients in ascending powers with trailing zeros
    trimmed. The zero polynomial has degree -1.
    """

    __slots__ = ("poly",)

    def __init__(self, coefficients: Iterable[Scalar] = ()):
        self.poly: PolyElement = Y_RING.from_dict(
            {(power,): to_qq(c) for power, c in enumerate(coefficients) if c != 0}
        )

    @classmethod
    def wrap(cls, poly: PolyElement) -> "YPolynomial":
        """Wrap an element of Y_RING without copying."""
        value = cls.__new__(cls)
        value.poly = poly
        return value

    # Constructors

    @classmethod
    def constant(cls, value: Scalar) -> "YPolynomial":
        return cls.wrap(Y_RING.ground_new(to_qq(value)))

    @classmethod
    def y(cls) -> "YPolynomial":
        return cls.wrap(_y)

    @classmethod
    def one_plus_y(cls, power: int = 1) -> "YPolynomial":
        """(1 + y)^power for power >= 0."""
        return cls.wrap((1 + _y) ** power)

    @classmethod
    def parse(cls, text: str) -> "YPolynomial":
        """
        Parse the canonical rendering, e.g. "1/2 - 1/2*y + y^2".

        Args:
            text: Polynomial text

        Returns:
            Parsed polynomial

        Raises:
            ValueError: If the text is not a polynomial in y
        """
        if not text.strip():
            raise ValueError("Empty polynomial text")
        try:
            expr = sympify(text, locals={"y": Y}, convert_xor=True)
        except SympifyError as exc:
            raise ValueError(f"Malformed polynomial: {text!r}") from exc
        return cls.wrap(Y_RING.from_expr(expr))

    # Queries

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return tuple(self.coefficient(power) for power in range(self.degree + 1))

    @property
    def degree(self) -> int:
        return int(self.poly.degree()) if self.poly else -1

    @property
    def leading(self) -> Fraction:
        return from_qq(self.poly.LC) if self.poly else Fraction(0)

    def is_zero(self) -> bool:
        return not self.poly

    def is_constant(self) -> bool:
        return self.degree <= 0

    def coefficient(self, power: int) -> Fraction:
        return from_qq(self.poly.get((power,), QQ.zero))

    def constant_term(self) -> Fraction:
        return self.coefficient(0)

    def evaluate(self, y: Scalar) -> Fraction:
        return from_qq(self.poly(to_qq(y)))

    # Arithmetic

    @staticmethod
    def _coerce(other) -> "YPolynomial":
        if isinstance(other, YPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return YPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return YPolynomial.wrap(self.poly + other.poly)

    __radd__ = __add__

    def __neg__(self):
        return YPolynomial.wrap(-self.poly)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return YPolynomial.wrap(self.poly - other.poly)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return YPolynomial.wrap(other.poly - self.poly)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return YPolynomial.wrap(self.poly * other.poly)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("Negative powers are not polynomials")
        return YPolynomial.wrap(self.poly ** exponent)

    def divmod(self, divisor: "YPolynomial") -> Tuple["YPolynomial", "YPolynomial"]:
        """
        Long division over the rationals.

        Args:
            divisor: Nonzero polynomial

        Returns:
            (quotient, remainder) with deg remainder < deg divisor

        Raises:
            ZeroDivisionError: If divisor is zero
        """
        divisor = self._coerce(divisor)
        quotient, remainder = self.poly.div(divisor.poly)
        return YPolynomial.wrap(quotient), YPolynomial.wrap(remainder)

    def monic(self) -> "YPolynomial":
        return YPolynomial.wrap(self.poly.monic())

    def gcd(self, other: "YPolynomial") -> "YPolynomial":
        """Monic greatest common divisor (zero if both are zero)."""
        return YPolynomial.wrap(self.poly.gcd(self._coerce(other).poly).monic())

    # Comparison and rendering

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __bool__(self):
        return bool(self.poly)

    def __str__(self):
        if not self.poly:
            return "0"

        parts = []
        for power, c in enumerate(self.coeffs):
            if c == 0:
                continue
            magnitude = abs(c)
            if power == 0:
                body = format_rational(magnitude)
            else:
                monomial = "y" if power == 1 else f"y^{power}"
                body = monomial if magnitude == 1 else f"{format_rational(magnitude)}*{monomial}"

            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"YPolynomial({str(self)!r})"


def specialize(value, y: Scalar) -> Fraction:
    """
    Evaluate a YPolynomial, YRational or plain rational at y.

    Args:
        value: Value to evaluate
        y: Rational specialization

    Returns:
        Exact rational value
    """
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    return value.evaluate(Fraction(y))
