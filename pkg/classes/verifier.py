"""
Identity verifier: runs every identity check on one complete fan.
"""

from typing import Iterable, Optional

from fan import Fan
from schemas.reports import IdentityReport
from utils.logger import LogBlock, logger
from .checks import BaseIdentityCheck, ClassContext, default_checks


class IdentityVerifier:
    """
    Orchestrates the identity checks over a shared ClassContext.

    The context computes each class once; checks only read it.
    """

    def __init__(self, checks: Optional[Iterable[BaseIdentityCheck]] = None):
        self.checks = list(checks) if checks is not None else default_checks()
        logger.debug(f"Identity verifier initialized with {len(self.checks)} checks")

    def verify(self, fan: Fan) -> IdentityReport:
        """
        Evaluate all checks on a fan.

        Args:
            fan: Complete simplicial fan

        Returns:
            IdentityReport with one result per check

        Raises:
            NotComplete: If the fan is not complete
        """
        context = ClassContext(fan)
        with LogBlock(f"verify identities on {fan!r}"):
            results = [check.run(context) for check in self.checks]

        failed = [r.name for r in results if not r.passed]
        if failed:
            logger.warning(f"Identity violations: {', '.join(failed)}")
        return IdentityReport(
            lattice_rank=fan.rank,
            results=results,
            all_passed=not failed,
        )


# Default verifier (singleton pattern)
_verifier = None


def get_verifier() -> IdentityVerifier:
    """Get or create the default verifier instance."""
    global _verifier
    if _verifier is None:
        _verifier = IdentityVerifier()
    return _verifier


def verify_identities(fan: Fan) -> IdentityReport:
    """Run the default identity suite on a complete fan."""
    return get_verifier().verify(fan)
