"""
Class dispatcher behind `fan class`.
"""

from fractions import Fraction
from typing import Optional

from errors import InvalidInputError
from fan import ConeSubset, Fan
from intersect import CycleClass, degree
from schemas.reports import ClassKind, ClassReport, CycleTerm
from utils.logger import logger
from utils.validators import validate_specialization
from .tclass import mock_t_class, t_class
from .lrr import hirzebruch_class, todd_lrr, todd_omega
from .mock import mock_hirzebruch
from .orbit import ehler_chern_class, orbit_classes_subset, todd_subset


SUBSET_KINDS = {ClassKind.HIRZEBRUCH, ClassKind.CHERN, ClassKind.TODD_SUBSET}

LABELS = {
    ClassKind.TODD: "td_*(X)",
    ClassKind.TODD_OMEGA: "td_*([omega_X])",
    ClassKind.MOCK_HIRZEBRUCH: "mock T-hat_y(X)",
    ClassKind.CHERN: "c_*(X)",
    ClassKind.TODD_SUBSET: "td_*(X')",
    ClassKind.T_CLASS: "T_*(X)",
    ClassKind.MOCK_T_CLASS: "T_*^(m)(X)",
}


def class_label(kind: ClassKind, normalized: bool, y: Optional[Fraction]) -> str:
    """Human-readable name of the requested class."""
    if kind is ClassKind.HIRZEBRUCH:
        if normalized and y == 1:
            return "T-hat_1 (L-class under projectivity)"
        return "T-hat_y(X)" if normalized else "T_y(X)"
    return LABELS[kind]


def class_of_kind(
    fan: Fan,
    kind: ClassKind,
    y: Optional[Fraction] = None,
    normalized: bool = True,
    subset: Optional[ConeSubset] = None,
) -> CycleClass:
    """
    Compute a class by kind, optionally over a subset and specialized in y.

    Args:
        fan: Simplicial fan
        kind: Class kind
        y: Rational specialization, or None for the symbolic class
        normalized: Normalization of the Hirzebruch class
        subset: Star-closed subset for the orbit-path kinds

    Returns:
        CycleClass on fan

    Raises:
        InvalidInputError: On an unsupported kind / subset / y combination
    """
    kind = ClassKind(kind)
    valid, message = validate_specialization(kind.value, y, normalized)
    if not valid:
        raise InvalidInputError(message, {"kind": kind.value, "y": str(y)})
    if subset is not None and kind not in SUBSET_KINDS:
        raise InvalidInputError(
            f"kind {kind.value} does not take a cone subset",
            {"kind": kind.value},
        )

    logger.info(f"Computing {kind.value} class (normalized={normalized}, y={y})")

    if kind is ClassKind.TODD:
        cycle = todd_lrr(fan)
    elif kind is ClassKind.TODD_OMEGA:
        cycle = todd_omega(fan)
    elif kind is ClassKind.HIRZEBRUCH:
        if subset is None:
            cycle = hirzebruch_class(fan, normalized)
        else:
            cycle = orbit_classes_subset(fan, subset, normalized)
    elif kind is ClassKind.MOCK_HIRZEBRUCH:
        cycle = mock_hirzebruch(fan)
    elif kind is ClassKind.CHERN:
        cycle = ehler_chern_class(fan, subset)
    elif kind is ClassKind.TODD_SUBSET:
        cycle = todd_subset(fan, subset)
    elif kind is ClassKind.T_CLASS:
        cycle = t_class(fan)
    else:
        cycle = mock_t_class(fan)

    if y is not None:
        cycle = cycle.specialize(y)
    return cycle


def class_report(
    fan: Fan,
    kind: ClassKind,
    y: Optional[Fraction] = None,
    normalized: bool = True,
    subset: Optional[ConeSubset] = None,
) -> ClassReport:
    """Compute a class and wrap it as a ClassReport; degree is filled on complete fans."""
    kind = ClassKind(kind)
    cycle = class_of_kind(fan, kind, y, normalized, subset)
    terms = [
        CycleTerm(cone=list(cone), orbit_dim=dim, coefficient=value)
        for cone, dim, value in cycle.to_terms()
    ]
    total = degree(cycle).to_polynomial() if fan.is_complete else None
    return ClassReport(
        kind=kind,
        label=class_label(kind, normalized, y),
        normalized=normalized,
        y=y,
        lattice_rank=fan.rank,
        subset=None if subset is None else [list(c) for c in subset],
        terms=terms,
        degree=total,
    )
