"""
Settings - Laboratory configuration using Pydantic Settings.

Loads from environment variables (prefix ``ISLAB_``) and .env files.
"""

from __future__ import annotations

from functools import lru_cache

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings."""

    # Semantics
    default_variant: str = "low=deadlock,high=deadlock"
    default_budget: int = 10000

    # Testing
    default_step_bound: int = 64
    domain_cap: int = 2**16

    # Fault engine
    default_profile: str = "s1"
    max_part_length: int = 3
    max_fragment_parts: int = 2

    # Process report thresholds
    testing_share_benchmark: float = 0.50
    wildcard_oracle_max: float = 0.50
    coverage_only_threshold: float = 0.80

    # Logging
    log_level: str = "WARNING"

    model_config = SettingsConfigDict(
        env_prefix="ISLAB_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
