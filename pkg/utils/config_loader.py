"""
Loading campaign configurations and reading environment settings.
"""

import json
import logging
import os
from pathlib import Path
from typing import Optional, Union

from pydantic import BaseModel, ValidationError

from components.errors import ConfigError
from models.campaign import CONFIG_MODELS

logger = logging.getLogger(__name__)

DEFAULT_LOG_LEVEL = "WARNING"


def load_config(command: str, path: Optional[Union[str, Path]] = None) -> BaseModel:
    """
    Build the configuration model for a command.

    Args:
        command: CLI command name
        path: JSON file; the command's default campaign when None

    Returns:
        The validated configuration model

    Raises:
        ConfigError: unknown command, unreadable file, malformed JSON or a
            value the model rejects
    """
    model = CONFIG_MODELS.get(command)
    if model is None:
        raise ConfigError(f"unknown command {command!r}")
    if path is None:
        logger.info("No config given for %s, running the default campaign", command)
        return model()

    path = Path(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except OSError as e:
        raise ConfigError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ConfigError(f"{path} is not valid JSON: {e}") from e

    try:
        config = model.model_validate(data)
    except ValidationError as e:
        raise ConfigError(f"{path} does not describe a {command} campaign:\n{e}") from e
    logger.info("Loaded %s config from %s", command, path)
    return config


def default_seed() -> int:
    raw = os.getenv("GALCONF_DEFAULT_SEED", "0")
    try:
        return int(raw)
    except ValueError as e:
        raise ConfigError(f"GALCONF_DEFAULT_SEED must be an integer, got {raw!r}") from e


def log_level(verbose: bool = False) -> str:
    if verbose:
        return "DEBUG"
    return os.getenv("GALCONF_LOG_LEVEL", DEFAULT_LOG_LEVEL).upper()


def resolve_seed(cli_seed: Optional[int], config_seed: Optional[int]) -> int:
    """The --seed flag wins over the config, which wins over the environment."""
    if cli_seed is not None:
        return cli_seed
    if config_seed is not None:
        return config_seed
    return default_seed()
