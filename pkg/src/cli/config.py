"""Runtime configuration for the command line: settings file plus environment overrides."""

import logging
import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

from config import LOG_LEVELS, Settings, get_settings


load_dotenv()

SETTINGS_ENV = "FPDATA_SETTINGS"
LOG_LEVEL_ENV = "FPDATA_LOG_LEVEL"


def load_runtime_settings(path: Optional[Path] = None) -> Settings:
    """Settings from `path`, else $FPDATA_SETTINGS, else config/settings.yaml."""

    env_path = os.getenv(SETTINGS_ENV)
    target = path or (Path(env_path) if env_path else None)
    settings = get_settings(target)

    level = os.getenv(LOG_LEVEL_ENV, "").upper()
    if level:
        if level not in LOG_LEVELS:
            raise ValueError(f"{LOG_LEVEL_ENV} must be one of {', '.join(LOG_LEVELS)}, got {level}")
        settings = settings.model_copy(
            update={"logging": settings.logging.model_copy(update={"level": level})}
        )
    return settings


def configure_logging(settings: Settings, debug: bool = False) -> None:
    level = logging.DEBUG if debug else getattr(logging, settings.logging.level)
    logging.basicConfig(level=level, format=settings.logging.format)
