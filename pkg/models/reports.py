"""Report models for campaign results."""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class CheckResult(BaseModel):
    """One named check inside a campaign."""

    identifier: str
    name: str
    passed: bool
    details: Dict[str, Any] = Field(default_factory=dict)


class CampaignReport(BaseModel):
    """
    The outcome of one CLI command.

    Checks keep the order in which the campaign ran them; passed is the
    conjunction of all checks.
    """

    command: str
    seed: Optional[int] = None
    passed: bool = True
    checks: List[CheckResult] = Field(default_factory=list)
    summary: Dict[str, Any] = Field(default_factory=dict)

    def add(self, check: CheckResult) -> CheckResult:
        self.checks.append(check)
        self.passed = self.passed and check.passed
        return check

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]
