"""Configuration loader for the fixed point data tools."""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from pydantic import BaseModel, PositiveInt, field_validator


CONFIG_PATH = Path(__file__).resolve().parent / "settings.yaml"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class ReductionSettings(BaseModel):
    step_cap_factor: PositiveInt = 4
    prefer_whole_summand: bool = True


class CertificateSettings(BaseModel):
    version: PositiveInt = 1
    validate_intermediate: bool = True


class FuzzSettings(BaseModel):
    seed: int = 0
    iterations: PositiveInt = 100
    max_summands: PositiveInt = 12
    max_param: PositiveInt = 10
    workers: PositiveInt = 1
    match_attempts: PositiveInt = 8


class LoggingSettings(BaseModel):
    level: str = "INFO"
    format: str = "%(asctime)s [%(levelname)s] %(name)s - %(message)s"

    @field_validator("level")
    @classmethod
    def validate_level(cls, value: str) -> str:
        level = value.upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"unknown log level: {value}")
        return level


class Settings(BaseModel):
    reduction: ReductionSettings = ReductionSettings()
    certificate: CertificateSettings = CertificateSettings()
    fuzz: FuzzSettings = FuzzSettings()
    logging: LoggingSettings = LoggingSettings()


def _load_yaml(path: Path) -> Dict[str, Any]:
    if not path.exists():
        raise FileNotFoundError(f"Settings file not found: {path}")
    with path.open("r", encoding="utf-8") as handle:
        return yaml.safe_load(handle) or {}


@lru_cache(maxsize=4)
def get_settings(path: Optional[Path] = None) -> Settings:
    """Load and cache settings."""

    target_path = path or CONFIG_PATH
    raw = _load_yaml(target_path)
    return Settings.model_validate(raw)
