"""
Intersection theory on simplicial toric varieties.

This package provides:
- CycleClass: classes in the orbit-closure basis
- CohomExpression and DivisorClass: truncated expressions in ray variables
- The intersection kernel (divisor-cycle products and cap products)
- Degree, pairing-based equality and pushforward from star fans
"""

from .cycles import CycleClass
from .cohomology import CohomExpression, DivisorClass, Monomial, exp_divisor, product
from .kernel import IntersectionKernel, get_kernel, divisor_times_cycle, cohom_cap
from .pairing import degree, pairing, pairings, pairing_equal, pairing_witness, pairing_table
from .pushforward import pushforward_from_star, fundamental_class, orbit_class

__all__ = [
    "CycleClass",
    "CohomExpression",
    "DivisorClass",
    "Monomial",
    "exp_divisor",
    "product",
    "IntersectionKernel",
    "get_kernel",
    "divisor_times_cycle",
    "cohom_cap",
    "degree",
    "pairing",
    "pairings",
    "pairing_equal",
    "pairing_witness",
    "pairing_table",
    "pushforward_from_star",
    "fundamental_class",
    "orbit_class",
]
