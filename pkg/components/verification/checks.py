"""
Recording checks into a campaign report.
"""

import logging
from typing import Any, Callable, Dict, List, Sequence, Tuple

from components.errors import GalconfError
from models.reports import CampaignReport, CheckResult

logger = logging.getLogger(__name__)

CheckOutcome = Tuple[bool, Dict[str, Any]]

# Violation lists are cut to this many entries in report details.
SAMPLE_SIZE = 5


def violation_details(violations: Sequence[Dict[str, Any]], **extra: Any) -> Dict[str, Any]:
    details: Dict[str, Any] = {"violations": len(violations), "first_violations": list(violations[:SAMPLE_SIZE])}
    details.update(extra)
    return details


class CheckRecorder:
    """
    Appends CheckResults to a report.

    A GalconfError raised inside a check is caught and recorded as a failed
    check naming the error, so the rest of the campaign still runs.
    """

    def __init__(self, report: CampaignReport):
        self.report = report

    def record(self, identifier: str, name: str, passed: bool, details: Dict[str, Any]) -> CheckResult:
        check = self.report.add(CheckResult(identifier=identifier, name=name, passed=bool(passed), details=details))
        if check.passed:
            logger.debug("%s | %s: passed", identifier, name)
        else:
            logger.warning("%s | %s: FAILED", identifier, name)
        return check

    def run(self, identifier: str, name: str, check: Callable[[], CheckOutcome]) -> CheckResult:
        try:
            passed, details = check()
        except GalconfError as e:
            logger.error("%s | %s raised %s: %s", identifier, name, type(e).__name__, e)
            passed, details = False, {"error": type(e).__name__, "message": str(e)}
        return self.record(identifier, name, passed, details)

    def violations(self, identifier: str, name: str, produce: Callable[[], List[Dict[str, Any]]], **extra: Any) -> CheckResult:
        """A check that passes when produce() returns no violations."""

        def check() -> CheckOutcome:
            found = produce()
            return not found, violation_details(found, **extra)

        return self.run(identifier, name, check)
