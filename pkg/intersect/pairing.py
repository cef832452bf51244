"""
Degree and pairing-based equality of cycle classes on complete fans.
"""

from typing import Dict, List, Optional

from fan import Cone, Fan
from scalars import YRational
from .cohomology import CohomExpression
from .cycles import CycleClass
from .kernel import get_kernel


def degree(cycle: CycleClass) -> YRational:
    """
    Degree of a cycle class: the sum of its point-class coefficients.

    Raises:
        NotComplete: If the fan is not complete
    """
    fan = cycle.fan
    fan.require_complete("degree")
    total = YRational()
    for cone, value in cycle.items():
        if len(cone) == fan.rank:
            total = total + value
    return total


def pairing(cycle: CycleClass, cone: Cone) -> YRational:
    """degree((prod_{rho in mu} x_rho) ∩ cycle) for one cone mu."""
    kernel = get_kernel(cycle.fan)
    monomial = tuple(sorted(cone))
    expression = CohomExpression({monomial: 1}, cycle.fan.rank)
    return degree(kernel.cap(expression, cycle.component(len(monomial))))


def pairings(cycle: CycleClass) -> Dict[Cone, YRational]:
    """All pairings against cone monomials, keyed by cone."""
    cycle.fan.require_complete("pairing")
    return {cone: pairing(cycle, cone) for cone in cycle.fan.cones}


def pairing_witness(first: CycleClass, second: CycleClass) -> Optional[Cone]:
    """
    First cone mu (in fan order) whose pairings with the two classes differ.

    Raises:
        NotComplete: If the fan is not complete
    """
    fan: Fan = first.fan
    if second.fan is not fan:
        raise ValueError("cycle classes live on different fans")
    fan.require_complete("pairing_equal")
    difference = first - second
    for cone in fan.cones:
        if not pairing(difference, cone).is_zero():
            return cone
    return None


def pairing_equal(first: CycleClass, second: CycleClass) -> bool:
    """
    Equality in homology, tested against every cone monomial.

    Raises:
        NotComplete: If the fan is not complete
    """
    return pairing_witness(first, second) is None


def pairing_table(cycle: CycleClass) -> List[tuple]:
    """(cone, pairing) rows for reports and debugging."""
    return [(list(cone), str(value)) for cone, value in pairings(cycle).items()]
