"""
Identity verifier.

This module runs registered identity checkers, concurrently when enabled,
and collects their reports in registry order.
"""

import asyncio
import logging
import time
from typing import List, Optional, Sequence

from ncseries.config import settings
from ncseries.identities import IDENTITIES, canonical_identity, default_bounds
from ncseries.models.report import Bounds, Discrepancy, IdentityReport

logger = logging.getLogger(__name__)


class IdentityVerifier:
    """Runner for identity checkers."""

    def __init__(self, concurrent: Optional[bool] = None):
        """
        Initialize the verifier.

        Args:
            concurrent: Run checkers in worker threads; defaults to the settings
        """
        self.concurrent = settings.concurrent if concurrent is None else concurrent

    async def run(self, identities: Sequence[str], bounds: Optional[Bounds] = None, seed: Optional[int] = None) -> List[IdentityReport]:
        """
        Run the given checkers.

        Args:
            identities: Identifiers or aliases; "all" expands to the whole registry
            bounds: Truncation orders shared by every checker
            seed: Seed for randomized checkers

        Returns:
            One report per identity, in registry order
        """
        keys = self.resolve(identities)
        bounds = bounds or default_bounds()
        seed = settings.seed if seed is None else seed
        started = time.time()

        if self.concurrent:
            outcomes = await asyncio.gather(
                *[asyncio.to_thread(IDENTITIES[key].check, bounds, seed) for key in keys],
                return_exceptions=True,
            )
        else:
            outcomes = []
            for key in keys:
                try:
                    outcomes.append(IDENTITIES[key].check(bounds, seed))
                except Exception as e:
                    outcomes.append(e)

        reports = [self._to_report(key, outcome, bounds) for key, outcome in zip(keys, outcomes)]
        passed = sum(report.passed for report in reports)
        logger.info(f"Verified {passed}/{len(reports)} identities in {time.time() - started:.2f}s")
        return reports

    @staticmethod
    def resolve(identities: Sequence[str]) -> List[str]:
        """Canonical identifiers in registry order, without duplicates."""
        if any(identity.strip().lower() == "all" for identity in identities):
            return list(IDENTITIES)
        wanted = {canonical_identity(identity) for identity in identities}
        return [key for key in IDENTITIES if key in wanted]

    @staticmethod
    def _to_report(key: str, outcome, bounds: Bounds) -> IdentityReport:
        if isinstance(outcome, Exception):
            logger.error(f"❌ {key} raised {type(outcome).__name__}: {outcome}", exc_info=outcome)
            return IdentityReport(
                identity=key,
                passed=False,
                orders=bounds.model_dump(),
                discrepancy=Discrepancy(location="checker", expected="a report", actual=f"{type(outcome).__name__}: {outcome}"),
                detail="checker raised an exception",
            )
        if outcome.passed:
            logger.info(f"✅ {key} passed ({len(outcome.checks)} checks)")
        else:
            logger.warning(f"❌ {key} failed at {outcome.discrepancy.location if outcome.discrepancy else 'unknown'}")
        return outcome


def verify(
    identities: Sequence[str],
    bounds: Optional[Bounds] = None,
    seed: Optional[int] = None,
    concurrent: Optional[bool] = None,
) -> List[IdentityReport]:
    """Synchronous entry point for the command line."""
    return asyncio.run(IdentityVerifier(concurrent=concurrent).run(identities, bounds, seed))
