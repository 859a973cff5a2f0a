"""
Runtime configuration for skinny-tilings.

Settings come from the process environment, optionally seeded from a .env
file (see env_template.txt). Command-line flags override them.
"""

import logging
import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

from .exceptions import ConfigurationError
from .types import GuessConfig

logger = logging.getLogger(__name__)

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


@dataclass
class Settings:
    """Engine limits and defaults."""
    width_cap: int = 8
    max_order: int = 40
    margin: int = 5
    oracle_terms: int = 4
    growth_index: int = 40
    growth_precision: int = 30
    log_level: str = "WARNING"
    log_file: Optional[str] = None

    def __post_init__(self) -> None:
        """Validate settings."""
        if self.width_cap < 1:
            raise ConfigurationError("SKINNY_WIDTH_CAP must be positive")
        if self.max_order < 1:
            raise ConfigurationError("SKINNY_MAX_ORDER must be positive")
        if self.margin < 1:
            raise ConfigurationError("SKINNY_MARGIN must be positive")
        if self.oracle_terms < 1:
            raise ConfigurationError("SKINNY_ORACLE_TERMS must be positive")
        if self.growth_index < 2:
            raise ConfigurationError("SKINNY_GROWTH_INDEX must be at least 2")
        if self.growth_precision < 5:
            raise ConfigurationError("SKINNY_GROWTH_PRECISION must be at least 5")
        if self.log_level.upper() not in _LOG_LEVELS:
            raise ConfigurationError(
                f"SKINNY_LOG_LEVEL must be one of {', '.join(_LOG_LEVELS)}"
            )

    def guess_config(self) -> GuessConfig:
        return GuessConfig(max_order=self.max_order, margin=self.margin)


def _int_setting(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        raise ConfigurationError(f"{name} must be an integer, got {raw!r}") from None


def load_settings(env_file: Optional[str] = None) -> Settings:
    """
    Load settings from the environment.

    Args:
        env_file: Optional path to a .env file; the default search applies
            when omitted.

    Returns:
        Validated settings

    Raises:
        ConfigurationError: If a variable holds an invalid value
    """
    load_dotenv(env_file)

    settings = Settings(
        width_cap=_int_setting("SKINNY_WIDTH_CAP", 8),
        max_order=_int_setting("SKINNY_MAX_ORDER", 40),
        margin=_int_setting("SKINNY_MARGIN", 5),
        oracle_terms=_int_setting("SKINNY_ORACLE_TERMS", 4),
        growth_index=_int_setting("SKINNY_GROWTH_INDEX", 40),
        growth_precision=_int_setting("SKINNY_GROWTH_PRECISION", 30),
        log_level=os.getenv("SKINNY_LOG_LEVEL", "WARNING").upper(),
        log_file=os.getenv("SKINNY_LOG_FILE") or None,
    )
    logger.debug(f"Loaded settings: {settings}")
    return settings
