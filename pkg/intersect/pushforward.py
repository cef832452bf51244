"""
Pushforward of cycle classes from orbit closures to the ambient fan.
"""

from fan import Fan, StarFan
from .cycles import CycleClass


def pushforward_from_star(star: StarFan, cycle: CycleClass) -> CycleClass:
    """
    (k_sigma)_* of a class on V_sigma.

    The coefficient on a star cone moves to the corresponding ambient
    cone; orbit dimensions agree on both sides.

    Args:
        star: Star fan correspondence of sigma
        cycle: Class on star.fan

    Returns:
        Class on the ambient fan
    """
    if cycle.fan is not star.fan:
        raise ValueError("cycle class does not live on this star fan")
    return CycleClass(star.ambient, {star.to_ambient(c): v for c, v in cycle.terms.items()})


def fundamental_class(fan: Fan) -> CycleClass:
    """[X]."""
    return CycleClass.fundamental(fan)


def orbit_class(fan: Fan, cone) -> CycleClass:
    """[V_sigma]."""
    return CycleClass.orbit(fan, cone)
