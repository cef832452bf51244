"""
Cycle classes in the orbit-closure basis.

A CycleClass is a formal Q(y)-combination of classes [V_sigma]. The
coefficient on sigma lives in homological degree dim O_sigma = d - dim sigma.
Representations are not canonical; compare with pairing_equal.
"""

from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Mapping, Tuple

from fan import Cone, Fan
from scalars import YPolynomial, YRational, as_yrational


class CycleClass:
    """Immutable cycle class on a fan."""

    __slots__ = ("fan", "terms")

    def __init__(self, fan: Fan, terms: Mapping[Cone, object] = None):
        self.fan = fan
        cleaned: Dict[Cone, YRational] = {}
        for cone, value in (terms or {}).items():
            coefficient = as_yrational(value)
            if not coefficient.is_zero():
                cleaned[tuple(cone)] = coefficient
        self.terms: Dict[Cone, YRational] = cleaned

    # Constructors

    @classmethod
    def zero(cls, fan: Fan) -> "CycleClass":
        return cls(fan)

    @classmethod
    def fundamental(cls, fan: Fan) -> "CycleClass":
        """[X] = [V_0]."""
        return cls(fan, {(): 1})

    @classmethod
    def orbit(cls, fan: Fan, cone: Cone, coefficient=1) -> "CycleClass":
        """coefficient * [V_sigma]."""
        return cls(fan, {fan.check_cone(cone): coefficient})

    # Queries

    def coefficient(self, cone: Cone) -> YRational:
        return self.terms.get(tuple(cone), YRational())

    def orbit_dim(self, cone: Cone) -> int:
        return self.fan.rank - len(cone)

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> Iterator[Tuple[Cone, YRational]]:
        """Terms in fan cone order."""
        for cone in self.fan.cones:
            if cone in self.terms:
                yield cone, self.terms[cone]

    # Algebra

    def _check(self, other: "CycleClass") -> None:
        if other.fan is not self.fan:
            raise ValueError("cycle classes live on different fans")

    def __add__(self, other: "CycleClass") -> "CycleClass":
        self._check(other)
        out = dict(self.terms)
        for cone, value in other.terms.items():
            out[cone] = out.get(cone, YRational()) + value
        return CycleClass(self.fan, out)

    def __neg__(self) -> "CycleClass":
        return CycleClass(self.fan, {c: -v for c, v in self.terms.items()})

    def __sub__(self, other: "CycleClass") -> "CycleClass":
        return self + (-other)

    def scale(self, factor) -> "CycleClass":
        factor = as_yrational(factor)
        return CycleClass(self.fan, {c: v * factor for c, v in self.terms.items()})

    __mul__ = scale
    __rmul__ = scale

    def map(self, fn: Callable[[Cone, YRational], object]) -> "CycleClass":
        return CycleClass(self.fan, {c: fn(c, v) for c, v in self.terms.items()})

    def component(self, k: int) -> "CycleClass":
        """Homological degree-k part."""
        return CycleClass(self.fan, {c: v for c, v in self.terms.items() if self.orbit_dim(c) == k})

    def scale_by_degree(self, fn: Callable[[int], object]) -> "CycleClass":
        """Multiply the degree-k component by fn(k)."""
        return self.map(lambda c, v: v * as_yrational(fn(self.orbit_dim(c))))

    def dual(self) -> "CycleClass":
        """Degree-k component times (-1)^k."""
        return self.scale_by_degree(lambda k: (-1) ** k)

    def adams(self, factor) -> "CycleClass":
        """Degree-k component times factor^k."""
        factor = as_yrational(factor)
        return self.scale_by_degree(lambda k: factor ** k)

    def specialize(self, y) -> "CycleClass":
        """Evaluate every coefficient at a rational y."""
        y = Fraction(y)
        return self.map(lambda c, v: v.evaluate(y))

    def on_fan(self, fan: Fan) -> "CycleClass":
        """Reinterpret the same cone keys on another fan."""
        return CycleClass(fan, {c: v for c, v in self.terms.items()})

    # Export

    def to_terms(self) -> List[Tuple[Cone, int, YPolynomial]]:
        """
        Terms as (cone, orbit dimension, polynomial coefficient).

        Raises:
            NotPolynomial: If a coefficient is not a polynomial in y
        """
        return [(c, self.orbit_dim(c), v.to_polynomial()) for c, v in self.items()]

    def __repr__(self):
        body = " + ".join(f"({v})*V{list(c)}" for c, v in self.items())
        return f"CycleClass({body or '0'})"
