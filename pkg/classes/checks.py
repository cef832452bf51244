"""
Identity checks over characteristic classes of a complete fan.

Each check computes two sides through independent code paths and
compares them in homology (pairing_equal) or as degree polynomials.
"""

from abc import ABC, abstractmethod
from functools import cached_property
from typing import Any, Dict, List, Optional, Tuple

from errors import IdentityViolation
from fan import Fan
from intersect import CycleClass, degree, pairing, pairing_witness
from scalars import as_yrational
from schemas.reports import IdentityResult
from utils.logger import log_check_activity
from .tclass import (
    l_class_orbit_sum,
    orbit_l_class_from_dual_todd,
    orbit_l_class_from_todd,
    t_class,
    t_class_corrected,
    todd_euler_maclaurin,
)
from .lrr import hirzebruch_class, normalize_class, todd_lrr, todd_omega
from .mock import hirzebruch_decomposed
from .orbit import (
    chi_y_subset,
    ehler_chern_class,
    euler_count,
    orbit_classes_subset,
    orbit_todd_dual_sum,
    signature,
)


class ClassContext:
    """Classes of one complete fan, computed on first use and shared by all checks."""

    def __init__(self, fan: Fan):
        fan.require_complete("verify_identities")
        self.fan = fan

    @cached_property
    def todd(self) -> CycleClass:
        return todd_lrr(self.fan)

    @cached_property
    def todd_omega(self) -> CycleClass:
        return todd_omega(self.fan)

    @cached_property
    def hirzebruch(self) -> CycleClass:
        return hirzebruch_class(self.fan, normalized=True)

    @cached_property
    def hirzebruch_unnormalized(self) -> CycleClass:
        return hirzebruch_class(self.fan, normalized=False)

    @cached_property
    def l_class(self) -> CycleClass:
        """Un-normalized class at y = 1."""
        return self.hirzebruch_unnormalized.specialize(1)

    @cached_property
    def t_class(self) -> CycleClass:
        return t_class(self.fan)


class BaseIdentityCheck(ABC):
    """
    Abstract base class for identity checks.

    Provides common functionality:
    - Structured activity logging
    - Result construction
    - Conversion of invariant failures into failed results
    """

    def __init__(self, name: str, tag: str, description: str):
        """
        Initialize the check.

        Args:
            name: Stable identity name used in reports
            tag: Identity family (duality, decomposition, ...)
            description: One-line statement of the identity
        """
        self.name = name
        self.tag = tag
        self.description = description

    @abstractmethod
    def evaluate(self, context: ClassContext) -> IdentityResult:
        """
        Evaluate both sides and compare them.

        Args:
            context: Shared classes of the fan

        Returns:
            IdentityResult
        """

    def run(self, context: ClassContext) -> IdentityResult:
        """Evaluate, turning an invariant failure into a failed result."""
        self._log_action("Evaluating", {"tag": self.tag})
        try:
            result = self.evaluate(context)
        except IdentityViolation as exc:
            self._log_action("Invariant failed", {"error": type(exc).__name__, "reason": exc.message})
            return self._create_result(False, detail=f"{type(exc).__name__}: {exc.message}")
        self._log_action("Evaluated", {"passed": result.passed})
        return result

    def _log_action(self, action: str, details: Optional[Dict[str, Any]] = None):
        log_check_activity(self.name, action, details)

    def _create_result(
        self,
        passed: bool,
        witness: Optional[List[int]] = None,
        lhs: Optional[str] = None,
        rhs: Optional[str] = None,
        detail: Optional[str] = None,
    ) -> IdentityResult:
        return IdentityResult(
            name=self.name,
            tag=self.tag,
            passed=passed,
            witness=witness,
            lhs=lhs,
            rhs=rhs,
            detail=detail,
        )


class PairingCheck(BaseIdentityCheck):
    """Identity between two cycle classes, compared cone monomial by cone monomial."""

    @abstractmethod
    def sides(self, context: ClassContext) -> Tuple[CycleClass, CycleClass]:
        """Left and right side of the identity."""

    def evaluate(self, context: ClassContext) -> IdentityResult:
        lhs, rhs = self.sides(context)
        witness = pairing_witness(lhs, rhs)
        if witness is None:
            return self._create_result(True)
        return self._create_result(
            False,
            witness=list(witness),
            lhs=str(pairing(lhs, witness)),
            rhs=str(pairing(rhs, witness)),
            detail=self.description,
        )


class DegreeCheck(BaseIdentityCheck):
    """Identity between two scalars, typically a degree and a combinatorial count."""

    @abstractmethod
    def values(self, context: ClassContext) -> Tuple[Any, Any]:
        """Left and right value."""

    def evaluate(self, context: ClassContext) -> IdentityResult:
        lhs, rhs = (as_yrational(v) for v in self.values(context))
        passed = lhs == rhs
        return self._create_result(
            passed,
            lhs=str(lhs),
            rhs=str(rhs),
            detail=None if passed else self.description,
        )


# Dualities

class ToddCanonicalDuality(PairingCheck):
    def __init__(self):
        super().__init__("todd-canonical-duality", "duality", "td_k([omega]) = (-1)^(d-k) td_k")

    def sides(self, context):
        d = context.fan.rank
        return context.todd_omega, context.todd.dual().scale((-1) ** d)


class OrbitToddDuality(PairingCheck):
    def __init__(self):
        super().__init__(
            "orbit-todd-duality", "duality", "td([omega]) = sum (-1)^(dim sigma) td(V_sigma)"
        )

    def sides(self, context):
        return context.todd_omega, orbit_todd_dual_sum(context.fan)


class LClassSelfDuality(PairingCheck):
    def __init__(self):
        super().__init__("l-class-self-duality", "duality", "T_1 = (-1)^d T_1 dual")

    def sides(self, context):
        d = context.fan.rank
        return context.l_class, context.l_class.dual().scale((-1) ** d)


class OrbitLClassDuality(PairingCheck):
    def __init__(self):
        super().__init__(
            "orbit-l-class-duality", "duality", "T_1 = sum (-1)^d (-2)^(dim O_sigma) td(V_sigma)"
        )

    def sides(self, context):
        return context.l_class, orbit_l_class_from_todd(context.fan)


class OrbitLClassDualForm(PairingCheck):
    def __init__(self):
        super().__init__(
            "orbit-l-class-dual-form", "duality", "T_1 = sum (-2)^(dim O_sigma) td(V_sigma) dual"
        )

    def sides(self, context):
        return context.l_class, orbit_l_class_from_dual_todd(context.fan)


# T-class identities

class ToddDoubling(PairingCheck):
    def __init__(self):
        super().__init__("todd-doubling", "t-class", "2^d td = sum T_1(V_sigma)")

    def sides(self, context):
        return context.todd.scale(2 ** context.fan.rank), l_class_orbit_sum(context.fan, normalized=False)


class NormalizedOrbitSum(PairingCheck):
    def __init__(self):
        super().__init__(
            "t-class-orbit-sum", "t-class", "T = sum T-hat_1(V_sigma)"
        )

    def sides(self, context):
        return context.t_class, l_class_orbit_sum(context.fan, normalized=True)


class MockCorrections(PairingCheck):
    def __init__(self):
        super().__init__(
            "t-class-mock-corrections", "t-class", "T = sum A_1(sigma) T_mock(V_sigma)"
        )

    def sides(self, context):
        return context.t_class, t_class_corrected(context.fan)


class ToddEulerMaclaurin(PairingCheck):
    def __init__(self):
        super().__init__(
            "todd-euler-maclaurin", "t-class", "td = sum alpha(sigma) half-weight orbit sums"
        )

    def sides(self, context):
        return context.todd, todd_euler_maclaurin(context.fan)


# Decomposition and specializations

class HirzebruchDecomposition(PairingCheck):
    def __init__(self):
        super().__init__(
            "hirzebruch-decomposition", "decomposition", "T-hat_y = mock + corrections"
        )

    def sides(self, context):
        return context.hirzebruch, hirzebruch_decomposed(context.fan)


class ToddSpecialization(PairingCheck):
    def __init__(self):
        super().__init__("todd-specialization", "specialization", "T-hat_0 = td")

    def sides(self, context):
        return context.hirzebruch.specialize(0), context.todd


class ChiYDegree(DegreeCheck):
    def __init__(self):
        super().__init__("chi-y-degree", "degree", "deg T-hat_y = sum (-1-y)^(dim O_sigma)")

    def values(self, context):
        return degree(context.hirzebruch), chi_y_subset(context.fan)


class EhlerDegree(DegreeCheck):
    def __init__(self):
        super().__init__("ehler-degree", "degree", "deg c_* = number of maximal cones")

    def values(self, context):
        return degree(ehler_chern_class(context.fan)), euler_count(context.fan)


class SignatureDegree(DegreeCheck):
    def __init__(self):
        super().__init__("signature-degree", "degree", "deg T-hat_1 = sum (-2)^(dim O_sigma)")

    def values(self, context):
        return degree(context.hirzebruch.specialize(1)), signature(context.fan)


# Cross-path agreement

class NormalizationCrossPath(PairingCheck):
    def __init__(self):
        super().__init__(
            "normalization-cross-path", "cross-path", "normalize(T_y) = T-hat_y"
        )

    def sides(self, context):
        return normalize_class(context.hirzebruch_unnormalized), context.hirzebruch


class OrbitVsLefschetz(PairingCheck):
    def __init__(self):
        super().__init__(
            "orbit-vs-lefschetz", "cross-path", "orbit decomposition = Lefschetz sum, normalized"
        )

    def sides(self, context):
        return orbit_classes_subset(context.fan, normalized=True), context.hirzebruch


class OrbitVsLefschetzUnnormalized(PairingCheck):
    def __init__(self):
        super().__init__(
            "orbit-vs-lefschetz-unnormalized",
            "cross-path",
            "orbit decomposition = Lefschetz sum, un-normalized",
        )

    def sides(self, context):
        return orbit_classes_subset(context.fan, normalized=False), context.hirzebruch_unnormalized


def default_checks() -> List[BaseIdentityCheck]:
    """All identity checks in report order."""
    return [
        ToddCanonicalDuality(),
        OrbitToddDuality(),
        LClassSelfDuality(),
        OrbitLClassDuality(),
        OrbitLClassDualForm(),
        ToddDoubling(),
        NormalizedOrbitSum(),
        MockCorrections(),
        ToddEulerMaclaurin(),
        HirzebruchDecomposition(),
        ToddSpecialization(),
        ChiYDegree(),
        EhlerDegree(),
        SignatureDegree(),
        NormalizationCrossPath(),
        OrbitVsLefschetz(),
        OrbitVsLefschetzUnnormalized(),
    ]
