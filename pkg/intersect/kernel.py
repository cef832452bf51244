"""
Intersection kernel of a simplicial fan.

Caps ray divisors with orbit closures using the toric Chow calculus:
transverse products follow from multiplicities, and a divisor meeting
its own orbit closure is first moved by a linear equivalence.
"""

import threading
from fractions import Fraction
from functools import lru_cache
from typing import Dict

from fan import Cone, Fan
from lattice import dual_functional, rational
from scalars import CyclotomicScalar, YRational
from utils.logger import logger
from .cohomology import CohomExpression, Monomial
from .cycles import CycleClass

Combination = Dict[Cone, Fraction]


class IntersectionKernel:
    """
    Memoized divisor-cycle products on one fan.

    All results are rational combinations of orbit closures; scalar
    coefficients of expressions are applied afterwards.
    """

    def __init__(self, fan: Fan):
        self.fan = fan
        self._divisor_cache: Dict[tuple, Combination] = {}
        self._monomial_cache: Dict[tuple, Combination] = {}
        self._lock = threading.Lock()

    def divisor_times_cycle(self, ray: int, cone: Cone) -> Combination:
        """
        x_rho applied to [V_sigma].

        Args:
            ray: Ray index rho
            cone: Cone sigma of the fan

        Returns:
            Map cone -> rational coefficient (empty for zero)
        """
        key = (ray, cone)
        cached = self._divisor_cache.get(key)
        if cached is not None:
            return cached

        fan = self.fan
        if ray not in cone:
            tau = tuple(sorted(cone + (ray,)))
            if fan.has_cone(tau):
                result = {tau: Fraction(fan.multiplicity(cone), fan.multiplicity(tau))}
            else:
                result = {}
        else:
            # move D_rho by div(chi^m) with <m, u_rho> = 1 and m zero on the rest of sigma
            m = dual_functional(fan.generators(cone), cone.index(ray), fan.rank)
            result = {}
            for other in range(len(fan.rays)):
                if other in cone:
                    continue
                weight = rational.dot(m, fan.rays[other])
                if weight == 0:
                    continue
                for tau, value in self.divisor_times_cycle(other, cone).items():
                    result[tau] = result.get(tau, Fraction(0)) - weight * value
            result = {c: v for c, v in result.items() if v != 0}

        with self._lock:
            self._divisor_cache[key] = result
        return result

    def monomial_cap(self, monomial: Monomial, cone: Cone) -> Combination:
        """
        A monomial applied to [V_sigma], one factor at a time in
        ascending ray order.
        """
        if not monomial:
            return {cone: Fraction(1)}
        if len(monomial) > self.fan.rank - len(cone):
            return {}

        key = (monomial, cone)
        cached = self._monomial_cache.get(key)
        if cached is not None:
            return cached

        result: Combination = {}
        for tau, value in self.divisor_times_cycle(monomial[0], cone).items():
            for target, inner in self.monomial_cap(monomial[1:], tau).items():
                result[target] = result.get(target, Fraction(0)) + value * inner
        result = {c: v for c, v in result.items() if v != 0}

        with self._lock:
            self._monomial_cache[key] = result
        return result

    def cap(self, expression: CohomExpression, cycle: CycleClass) -> CycleClass:
        """
        Cap product of an expression with a cycle class.

        Raises:
            NotRational: If a cyclotomic coefficient does not collapse
        """
        if cycle.fan is not self.fan:
            raise ValueError("cycle class lives on a different fan")

        totals: Dict[Cone, object] = {}
        for cone, coefficient in cycle.items():
            room = self.fan.rank - len(cone)
            for monomial, scalar in expression.items():
                if len(monomial) > room:
                    continue
                weight = scalar * coefficient
                for target, value in self.monomial_cap(monomial, cone).items():
                    term = weight * value
                    totals[target] = totals[target] + term if target in totals else term

        return CycleClass(self.fan, {c: _rational(v) for c, v in totals.items()})


def _rational(value) -> YRational:
    if isinstance(value, CyclotomicScalar):
        return value.rational_part()
    return value


@lru_cache(maxsize=128)
def get_kernel(fan: Fan) -> IntersectionKernel:
    """Shared kernel per fan (fans hash by identity)."""
    logger.debug(f"Creating intersection kernel for {fan}")
    return IntersectionKernel(fan)


def divisor_times_cycle(fan: Fan, ray: int, cycle: CycleClass) -> CycleClass:
    """x_rho capped with a cycle class."""
    return cohom_cap(CohomExpression.variable(ray, fan.rank), cycle)


def cohom_cap(expression: CohomExpression, cycle: CycleClass) -> CycleClass:
    """expression ∩ cycle on the cycle's fan."""
    return get_kernel(cycle.fan).cap(expression, cycle)
