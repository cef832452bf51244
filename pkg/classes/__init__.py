"""
Characteristic classes of simplicial toric varieties.

This package provides:
- Per-ray series and the Lefschetz-Riemann-Roch classes (Todd, Hirzebruch)
- Orbit-decomposition classes over star-closed subsets
- Mock classes, singular-cone corrections and T-classes
- The identity verification suite and the `fan class` dispatcher
"""

from .series import (
    SeriesKind,
    TODD,
    TODD_OMEGA,
    HIRZEBRUCH_NORMALIZED,
    HIRZEBRUCH_UNNORMALIZED,
    ALPHA,
    TODD_HALF_SHIFTED,
    todd_series,
    trivial_factor,
    twisted_factor,
    twisted_ratio,
)
from .lrr import hirzebruch_class, lefschetz_class, normalize_class, todd_lrr, todd_omega
from .mock import (
    alpha_series,
    correction_series,
    hirzebruch_decomposed,
    mock_chern,
    mock_hirzebruch,
    top_contribution,
    weighted_projective_correction,
)
from .orbit import (
    chi_y_subset,
    ehler_chern_class,
    euler_count,
    orbit_classes_subset,
    orbit_todd_dual_sum,
    signature,
    star_hirzebruch,
    star_todd,
    star_todd_omega,
    todd_subset,
)
from .tclass import (
    TClassSuite,
    l_class_orbit_sum,
    mock_t_class,
    mock_t_class_of_orbit,
    t_class,
    t_class_corrected,
    t_class_suite,
    todd_euler_maclaurin,
)
from .checks import BaseIdentityCheck, ClassContext, default_checks
from .verifier import IdentityVerifier, get_verifier, verify_identities
from .dispatch import class_label, class_of_kind, class_report

__all__ = [
    "SeriesKind",
    "TODD",
    "TODD_OMEGA",
    "HIRZEBRUCH_NORMALIZED",
    "HIRZEBRUCH_UNNORMALIZED",
    "ALPHA",
    "TODD_HALF_SHIFTED",
    "todd_series",
    "trivial_factor",
    "twisted_factor",
    "twisted_ratio",
    "hirzebruch_class",
    "lefschetz_class",
    "normalize_class",
    "todd_lrr",
    "todd_omega",
    "alpha_series",
    "correction_series",
    "hirzebruch_decomposed",
    "mock_chern",
    "mock_hirzebruch",
    "top_contribution",
    "weighted_projective_correction",
    "chi_y_subset",
    "ehler_chern_class",
    "euler_count",
    "orbit_classes_subset",
    "orbit_todd_dual_sum",
    "signature",
    "star_hirzebruch",
    "star_todd",
    "star_todd_omega",
    "todd_subset",
    "TClassSuite",
    "l_class_orbit_sum",
    "mock_t_class",
    "mock_t_class_of_orbit",
    "t_class",
    "t_class_corrected",
    "t_class_suite",
    "todd_euler_maclaurin",
    "BaseIdentityCheck",
    "ClassContext",
    "default_checks",
    "IdentityVerifier",
    "get_verifier",
    "verify_identities",
    "class_label",
    "class_of_kind",
    "class_report",
]
