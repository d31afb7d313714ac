"""
Main entry point for galconf verification campaigns.

    python main.py <command> [--config PATH] [--json PATH] [--seed N] [--verbose]

Exit codes: 0 when every check passed, 1 when a check failed or a campaign
raised, 2 when the configuration could not be loaded.
"""

import argparse
import logging
import sys
from typing import Optional, Sequence

from dotenv import load_dotenv

from components.errors import AssertionFailure, ConfigError, GalconfError
from components.verification.campaign_manager import campaign_manager, require_passed
from components.verification.report_generator import ReportGenerator
from models.campaign import COMMANDS
from utils.config_loader import load_config, log_level, resolve_seed
from utils.results_handler import ResultsHandler

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Exact verification campaigns for the planar Galilean conformal algebra"
    )
    parser.add_argument("command", choices=COMMANDS, help="Campaign to run")
    parser.add_argument("--config", type=str, help="JSON campaign config; the command's default when omitted")
    parser.add_argument("--json", type=str, help="Write the JSON report here instead of printing the text report")
    parser.add_argument("--seed", type=int, help="Seed for randomized checks; overrides the config")
    parser.add_argument("--verbose", action="store_true", help="Log at DEBUG level")
    return parser


def setup_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=log_level(verbose),
        format="%(asctime)s [%(levelname)s] %(message)s",
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    load_dotenv()
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)

    try:
        config = load_config(args.command, args.config)
        seed = resolve_seed(args.seed, config.seed)
    except ConfigError as e:
        logger.error("%s", e)
        return EXIT_CONFIG

    try:
        report = campaign_manager.run(args.command, config, seed)
        if args.json:
            ResultsHandler().save_report(report, args.json)
        else:
            sys.stdout.write(ReportGenerator.generate_text_report(report))
        require_passed(report)
    except AssertionFailure as e:
        logger.error("%s", e)
        return EXIT_FAILED
    except GalconfError as e:
        logger.error("%s: %s", type(e).__name__, e)
        return EXIT_FAILED
    except Exception:
        logger.exception("Unexpected error while running %s", args.command)
        return EXIT_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
