"""
Campaign manager: dispatches a CLI command to its campaign and assembles the report.
"""

import logging
import random
from typing import Callable, Dict

from pydantic import BaseModel

from components.errors import AssertionFailure, ConfigError
from components.verification.algebra_campaigns import algebra_handler
from components.verification.checks import SAMPLE_SIZE, CheckRecorder
from components.verification.tensor_campaigns import tensor_handler
from components.verification.whittaker_campaigns import whittaker_handler
from models.reports import CampaignReport

logger = logging.getLogger(__name__)

Campaign = Callable[[BaseModel, random.Random, CheckRecorder], Dict]


class CampaignManager:
    """
    Runs one verification campaign per command.

    Every randomized check draws from a single random.Random seeded once per
    run, so a report is a pure function of (command, config, seed).
    """

    def __init__(self):
        self.campaigns: Dict[str, Campaign] = {
            "verify-algebra": algebra_handler.verify_algebra,
            "verify-omega": algebra_handler.verify_omega,
            "whittaker-search": whittaker_handler.whittaker_search,
            "twist": whittaker_handler.twist,
            "psi14": whittaker_handler.psi14,
            "tensor-probe": tensor_handler.tensor_probe,
            "degree-check": whittaker_handler.degree_check,
        }

    def run(self, command: str, config: BaseModel, seed: int) -> CampaignReport:
        """
        Run a campaign.

        Args:
            command: CLI command name
            config: Validated configuration model for the command
            seed: Seed for every randomized sample in the campaign

        Returns:
            CampaignReport with checks ordered by identifier, then by run order

        Raises:
            ConfigError: unknown command
        """
        campaign = self.campaigns.get(command)
        if campaign is None:
            raise ConfigError(f"unknown command {command!r}")
        logger.info("Starting %s with seed %d", command, seed)
        report = CampaignReport(command=command, seed=seed)
        summary = campaign(config, random.Random(seed), CheckRecorder(report))
        report.checks.sort(key=lambda check: check.identifier)
        report.summary = dict(summary or {})
        report.summary["checks"] = len(report.checks)
        report.summary["failed"] = len(report.failures)
        logger.info("%s finished: %d/%d checks passed", command, len(report.checks) - len(report.failures), len(report.checks))
        return report


def require_passed(report: CampaignReport) -> None:
    """Raise AssertionFailure naming the failed checks of a report."""
    if report.passed:
        return
    names = ", ".join(f"{check.identifier} | {check.name}" for check in report.failures[:SAMPLE_SIZE])
    raise AssertionFailure(f"{len(report.failures)} of {len(report.checks)} checks failed: {names}")


# Create a singleton instance
campaign_manager = CampaignManager()
