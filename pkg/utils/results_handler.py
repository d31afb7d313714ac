"""
Utility for saving campaign reports
"""

import json
import logging
import os
from pathlib import Path
from typing import Optional, Union

from components.verification.report_generator import ReportGenerator
from models.reports import CampaignReport

logger = logging.getLogger(__name__)


class ResultsHandler:
    """Writes campaign reports as JSON under the results directory"""

    def __init__(self, results_dir: Optional[Union[str, Path]] = None):
        if results_dir is None:
            results_dir = os.getenv("GALCONF_RESULTS_DIR", "results")
        self.results_dir = Path(results_dir)

    def resolve(self, path: Union[str, Path]) -> Path:
        """A bare file name lands in the results directory; any other path is kept."""
        path = Path(path)
        return self.results_dir / path if path.parent == Path(".") else path

    def save_report(self, report: CampaignReport, path: Optional[Union[str, Path]] = None) -> Path:
        """
        Save a report

        Args:
            report: The campaign report
            path: Target file; <command>.json in the results directory when None

        Returns:
            The path written
        """
        output_file = self.resolve(path or f"{report.command}.json")
        output_file.parent.mkdir(parents=True, exist_ok=True)
        with open(output_file, "w", encoding="utf-8") as f:
            f.write(ReportGenerator.generate_json_report(report))
        logger.info("Report written to %s", output_file)
        return output_file

    def load_report(self, path: Union[str, Path]) -> CampaignReport:
        with open(self.resolve(path), "r", encoding="utf-8") as f:
            return CampaignReport.model_validate(json.load(f))
