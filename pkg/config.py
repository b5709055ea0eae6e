"""
config.py

Library-wide settings, read from the environment (and an optional .env file).
"""

from __future__ import annotations
import os
from dataclasses import dataclass
from dotenv import load_dotenv

_LOG_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}


@dataclass(frozen=True)
class Settings:
    log_level: str = "WARNING"
    oracle_cap: int = 10 ** 8
    oracle_radius: int = 10
    solve_timeout: float = 30.0


def _int_from_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise EnvironmentError(f"{name} must be an integer, got {raw!r}")
    if value <= 0:
        raise EnvironmentError(f"{name} must be positive, got {value}")
    return value


def get_settings() -> Settings:
    """Load settings; environment variables override the defaults."""
    load_dotenv()
    level = os.getenv("DIOPHANTINE_LOG_LEVEL", Settings.log_level).strip().upper()
    if level not in _LOG_LEVELS:
        raise EnvironmentError(f"DIOPHANTINE_LOG_LEVEL must be one of {sorted(_LOG_LEVELS)}, got {level!r}")
    raw_timeout = os.getenv("DIOPHANTINE_SOLVE_TIMEOUT")
    try:
        timeout = float(raw_timeout) if raw_timeout else Settings.solve_timeout
    except ValueError:
        raise EnvironmentError(f"DIOPHANTINE_SOLVE_TIMEOUT must be a number, got {raw_timeout!r}")
    return Settings(
        log_level=level,
        oracle_cap=_int_from_env("DIOPHANTINE_ORACLE_CAP", Settings.oracle_cap),
        oracle_radius=_int_from_env("DIOPHANTINE_ORACLE_RADIUS", Settings.oracle_radius),
        solve_timeout=timeout,
    )
