"""
Report generator for campaign results.
"""

import json
import logging
from typing import Any, Dict

import pandas as pd

from models.reports import CampaignReport

logger = logging.getLogger(__name__)

BANNER = "=" * 71


class ReportGenerator:
    """
    Renders campaign reports as text or JSON.
    """

    @staticmethod
    def checks_frame(report: CampaignReport) -> pd.DataFrame:
        rows = [
            {"identifier": check.identifier, "check": check.name, "result": "PASS" if check.passed else "FAIL"}
            for check in report.checks
        ]
        return pd.DataFrame(rows, columns=["identifier", "check", "result"])

    @staticmethod
    def _summary_lines(summary: Dict[str, Any]) -> str:
        lines = []
        for key in sorted(summary):
            value = summary[key]
            if isinstance(value, dict):
                lines.append(f"{key}:")
                lines.extend(f"  {inner}: {value[inner]}" for inner in sorted(value))
            else:
                lines.append(f"{key}: {value}")
        return "\n".join(lines)

    @staticmethod
    def generate_text_report(report: CampaignReport) -> str:
        """
        Generate a text report.

        Args:
            report: The campaign report

        Returns:
            Formatted text report: banner, check table, failures and summary
        """
        frame = ReportGenerator.checks_frame(report)
        table = frame.to_string(index=False) if not frame.empty else "(no checks)"
        verdict = "PASSED" if report.passed else "FAILED"
        text = f"""
{BANNER}
                     GALCONF {report.command.upper()} REPORT
{BANNER}
SEED: {report.seed}
RESULT: {verdict} ({len(report.checks) - len(report.failures)}/{len(report.checks)} checks)
{BANNER}

CHECKS
------
{table}
"""
        if report.failures:
            text += """
FAILURES
--------
"""
            for check in report.failures:
                text += f"""
{check.identifier} | {check.name}
{json.dumps(check.details, sort_keys=True, indent=2)}
"""
        if report.summary:
            text += f"""
SUMMARY
-------
{ReportGenerator._summary_lines(report.summary)}
"""
        return text

    @staticmethod
    def generate_json_report(report: CampaignReport) -> str:
        """Deterministic JSON: sorted keys, two-space indent, trailing newline."""
        return json.dumps(report.model_dump(mode="json"), sort_keys=True, indent=2) + "\n"
