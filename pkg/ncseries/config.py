"""
Runtime configuration.

Defaults are read from the environment (optionally from a ``.env`` file)
so CI jobs can raise truncation orders without touching command lines.
"""

import os

from dotenv import load_dotenv
from pydantic import BaseModel, Field

load_dotenv()


def _env_int(name: str, default: int) -> int:
    return int(os.getenv(name, default))


def _env_bool(name: str, default: bool) -> bool:
    return os.getenv(name, str(default)).strip().lower() in {"1", "true", "yes", "on"}


class Settings(BaseModel):
    """Process-wide defaults for bounds, seeds and logging."""

    max_len: int = Field(default_factory=lambda: _env_int("NCSERIES_MAX_LEN", 6))
    max_weight: int = Field(default_factory=lambda: _env_int("NCSERIES_MAX_WEIGHT", 15))
    max_q: int = Field(default_factory=lambda: _env_int("NCSERIES_MAX_Q", 30))
    max_z: int = Field(default_factory=lambda: _env_int("NCSERIES_MAX_Z", 8))
    seed: int = Field(default_factory=lambda: _env_int("NCSERIES_SEED", 2024))
    log_level: str = Field(default_factory=lambda: os.getenv("NCSERIES_LOG_LEVEL", "WARNING"))
    concurrent: bool = Field(default_factory=lambda: _env_bool("NCSERIES_CONCURRENT", True))


settings = Settings()
