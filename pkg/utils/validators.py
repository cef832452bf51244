"""
Validation utilities for command options.
"""

from fractions import Fraction
from typing import Optional, Tuple


NORMALIZED_KINDS = {"hirzebruch", "mock-hirzebruch", "chern", "todd", "todd-subset", "t-class", "mock-t-class"}


def validate_specialization(kind: str, y: Optional[Fraction], normalized: bool) -> Tuple[bool, Optional[str]]:
    """
    Validate a y-specialization for a class kind.

    y = -1 is refused on un-normalized Hirzebruch classes, whose
    prefactor (1 + y)^(d - n) has a pole there.

    Args:
        kind: Class kind value
        y: Requested specialization, or None for the symbolic class
        normalized: Whether the normalized class was requested

    Returns:
        Tuple of (is_valid, error_message)
    """
    if y is None or y != -1:
        return True, None

    if kind == "hirzebruch" and not normalized:
        return False, "y = -1 is only available on normalized classes"

    if kind not in NORMALIZED_KINDS:
        return False, f"y = -1 is not available for kind {kind}"

    return True, None


def validate_max_dilate(max_dilate: int) -> Tuple[bool, Optional[str]]:
    """
    Validate the largest dilation factor for brute-force counts.

    Args:
        max_dilate: Largest dilation

    Returns:
        Tuple of (is_valid, error_message)
    """
    if max_dilate < 0:
        return False, "--max-dilate must be nonnegative"
    return True, None


def validate_threads(threads: int) -> Tuple[bool, Optional[str]]:
    """
    Validate the worker count.

    Args:
        threads: Requested worker threads

    Returns:
        Tuple of (is_valid, error_message)
    """
    if threads < 1:
        return False, "--threads must be at least 1"
    if threads > 64:
        return False, "--threads must be at most 64"
    return True, None


def validate_rank_cap(rank: int, cap: int) -> Tuple[bool, Optional[str]]:
    """
    Validate a polytope rank against the facet enumeration cap.

    Args:
        rank: Ambient rank of the polytope
        cap: Largest supported rank

    Returns:
        Tuple of (is_valid, error_message)
    """
    if rank > cap:
        return False, f"facet enumeration supports rank <= {cap}, got {rank}"
    return True, None
