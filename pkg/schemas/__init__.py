"""
Input and report schemas for the command line.
"""

from .inputs import FanInput, PolytopeInput, PolytopeSubcomplexInput, ConeSubsetInput
from .reports import (
    ClassKind,
    PolynomialField,
    RationalField,
    CycleTerm,
    ClassReport,
    SingularCone,
    FanReport,
    IdentityResult,
    IdentityReport,
    FacetEntry,
    FacetReport,
    EhrhartRow,
    ReciprocityRow,
    EhrhartResult,
    WeightedCountReport,
    IshidaEntry,
    HirzebruchPolynomialReport,
    PickReport,
    ErrorReport,
)

__all__ = [
    # Inputs
    "FanInput",
    "PolytopeInput",
    "PolytopeSubcomplexInput",
    "ConeSubsetInput",
    # Reports
    "ClassKind",
    "PolynomialField",
    "RationalField",
    "CycleTerm",
    "ClassReport",
    "SingularCone",
    "FanReport",
    "IdentityResult",
    "IdentityReport",
    "FacetEntry",
    "FacetReport",
    "EhrhartRow",
    "ReciprocityRow",
    "EhrhartResult",
    "WeightedCountReport",
    "IshidaEntry",
    "HirzebruchPolynomialReport",
    "PickReport",
    "ErrorReport",
]
