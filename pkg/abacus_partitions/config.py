import os
from typing import Optional
from pydantic import BaseModel, Field
from dotenv import load_dotenv

# Load environment variables from .env file if present
load_dotenv()

ENV_VARS = {
    "max_n": "ABACUS_MAX_N",
    "brute_force_limit": "ABACUS_BRUTE_FORCE_LIMIT",
    "precision_digits": "ABACUS_PRECISION",
    "workers": "ABACUS_WORKERS",
}


class Settings(BaseModel):
    """Application settings loaded from environment variables and CLI."""

    max_n: int = Field(5000, ge=0, description="Largest index any count table may reach.")
    brute_force_limit: int = Field(60, ge=0, description="Largest n accepted by brute-force partition generation.")
    precision_digits: int = Field(50, ge=30, description="Working precision (decimal digits) for logarithms and estimates.")
    workers: int = Field(4, ge=1, description="Thread count for range-based bound checks.")


def _env_int(field: str) -> Optional[int]:
    """Reads an integer override from the environment, if present."""
    name = ENV_VARS[field]
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}.")


def load_settings(**overrides: Optional[int]) -> Settings:
    """
    Loads and validates settings.

    Priority: explicit overrides (CLI) > ABACUS_* environment variables > defaults.
    """
    values = {}
    for field in ENV_VARS:
        value = overrides.get(field)
        if value is None:
            value = _env_int(field)
        if value is not None:
            values[field] = value

    try:
        return Settings(**values)
    except Exception as e:
        raise ValueError(f"Invalid settings: {e}")


_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Returns the process-wide settings, loading them on first use."""
    global _settings
    if _settings is None:
        _settings = load_settings()
    return _settings


def use_settings(settings: Optional[Settings]) -> None:
    """Replaces the process-wide settings (None forces a reload on next use)."""
    global _settings
    _settings = settings
