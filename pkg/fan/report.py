"""
Predicate summary of a fan for `fan info`.
"""

from schemas.reports import FanReport, SingularCone
from .model import Fan


def fan_report(fan: Fan) -> FanReport:
    """
    Summarize smoothness, completeness and singular cones.

    Completeness is the ridge-pairing and sampling test, reported as
    "complete (checked)".

    Args:
        fan: A built fan

    Returns:
        FanReport
    """
    complete = fan.is_complete
    return FanReport(
        lattice_rank=fan.rank,
        num_rays=len(fan.rays),
        num_cones=len(fan.cones),
        simplicial=True,
        smooth=fan.is_smooth,
        complete=complete,
        completeness="complete (checked)" if complete else "incomplete",
        singular_cones=[
            SingularCone(cone=list(c), multiplicity=fan.multiplicity(c)) for c in fan.singular_cones
        ],
        torus_factor=fan.torus_rank > 0,
        torus_rank=fan.torus_rank,
    )
