"""
Environment-driven defaults for the command-line harness.

Values come from the process environment, optionally seeded from a .env
file in the working directory.
"""

import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv


@dataclass(frozen=True)
class Settings:
    """Resolved harness defaults."""

    jobs: int = 1
    outputFormat: str = "json"
    logLevel: str = "WARNING"
    outputPath: Optional[str] = None


_settings: Optional[Settings] = None


def _intFromEnv(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return max(1, int(raw))
    except ValueError:
        return default


def getSettings(reload: bool = False) -> Settings:
    """
    Load settings once from .env and the environment.

    Args:
        reload: Re-read the environment even if settings were loaded before

    Returns:
        Settings instance
    """
    global _settings
    if _settings is None or reload:
        load_dotenv()
        _settings = Settings(
            jobs=_intFromEnv("KHL_JOBS", 1),
            outputFormat=os.getenv("KHL_FORMAT", "json").lower(),
            logLevel=os.getenv("KHL_LOG_LEVEL", "WARNING").upper(),
            outputPath=os.getenv("KHL_OUTPUT") or None,
        )
    return _settings
