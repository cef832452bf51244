"""
Exception hierarchy for the toric class engine.

Every error carries the exit code of its category:
1 = invalid input, 2 = identity violation, 3 = unsupported input.
"""

from typing import Any, Dict, Optional


EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_IDENTITY_VIOLATION = 2
EXIT_UNSUPPORTED = 3


class ToricError(Exception):
    """Base class for all engine errors."""

    exit_code: int = EXIT_INVALID_INPUT

    def __init__(self, message: str, detail: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.detail = detail or {}

    def to_dict(self) -> Dict[str, Any]:
        """Serializable view used by the CLI error reports."""
        return {"error": type(self).__name__, "message": self.message, "detail": self.detail}


# Categories

class InvalidInputError(ToricError):
    """Input data violates a precondition."""

    exit_code = EXIT_INVALID_INPUT


class IdentityViolation(ToricError):
    """An exactness invariant of the class formulas failed."""

    exit_code = EXIT_IDENTITY_VIOLATION


class UnsupportedInput(ToricError):
    """Input is valid but outside what the engine handles."""

    exit_code = EXIT_UNSUPPORTED


# Scalars

class NotRational(IdentityViolation):
    """A cyclotomic value has a surviving root-of-unity component."""


class NotDivisible(IdentityViolation):
    """Exact division by a power of (1 + y) left a remainder."""


class NotPolynomial(IdentityViolation):
    """A rational function in y was expected to be a polynomial."""


# Lattice

class NotSaturated(InvalidInputError):
    """The quotient by a sublattice would have torsion."""


NotSaturatedQuotient = NotSaturated


class DependentGenerators(InvalidInputError):
    """Cone generators are linearly dependent."""


# Fans

class InvalidFanData(InvalidInputError):
    """Malformed fan description (indices, duplicates, unused rays)."""


class NonPrimitiveRay(InvalidInputError):
    """A ray generator is zero or not primitive."""


class NotSimplicial(UnsupportedInput):
    """A cone has linearly dependent rays."""


class BadIntersection(InvalidInputError):
    """Two cones meet outside a common face."""


class NotStarClosed(InvalidInputError):
    """A cone subset misses a cone containing one of its members."""


class NotComplete(InvalidInputError):
    """The operation needs a complete fan."""


# Polytopes

class InvalidPolytopeData(InvalidInputError):
    """Malformed polytope description (duplicates, non-vertices, bad faces)."""


class NotFullDimensional(InvalidInputError):
    """Vertices do not affinely span the ambient space."""


class RankTooHigh(UnsupportedInput):
    """Facet enumeration is capped in rank."""


class NotSimple(UnsupportedInput):
    """Some vertex lies on more facets than the dimension."""


class NotPolygon(InvalidInputError):
    """The operation needs a polygon."""
