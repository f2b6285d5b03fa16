"""
Configuration settings for HyperTorsion.
"""
from pathlib import Path
from typing import Tuple, Type

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings using pydantic-settings."""

    model_config = SettingsConfigDict(extra="ignore", validate_default=True)

    # Application settings
    APP_NAME: str = "HyperTorsion"
    DEBUG: bool = False
    LOG_LEVEL: str = "WARNING"

    # Paths
    BASE_DIR: Path = Path(__file__).parent.parent.parent
    FIXTURES_DIR: Path = Field(default_factory=lambda: Path(__file__).parent.parent.parent / "fixtures")

    # Continued fractions: default max order is ORDER_BOUND_FACTOR * (4g + 2)
    ORDER_BOUND_FACTOR: int = 4

    # Galois certification
    GALOIS_PRIME_BOUND: int = 1000
    FACTOR_SEED: int = 20240611

    # Jacobian oracle
    PRIME_SEARCH_BOUND: int = 10000
    CERTIFICATE_PRIMES: int = 3

    # Search workers
    DEFAULT_JOBS: int = 1
    MAX_JOBS: int = 64
    SEARCH_PROGRESS: bool = True

    @field_validator("LOG_LEVEL", mode="before")
    @classmethod
    def normalize_log_level(cls, v: str) -> str:
        level = str(v).strip().upper()
        if level not in {"CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG"}:
            raise ValueError(f"Unknown log level: {v}")
        return level

    @field_validator("ORDER_BOUND_FACTOR", "GALOIS_PRIME_BOUND", "PRIME_SEARCH_BOUND", "CERTIFICATE_PRIMES", "DEFAULT_JOBS")
    @classmethod
    def must_be_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError("must be a positive integer")
        return v

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: Type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> Tuple[PydanticBaseSettingsSource, ...]:
        # The command line is the only configuration surface; no environment lookup.
        return (init_settings,)

    def default_order_bound(self, genus: int) -> int:
        """Cutoff on (g+1) + sum(deg a_i) past which an expansion is declared non-periodic."""
        return self.ORDER_BOUND_FACTOR * (4 * genus + 2)


# Create a singleton instance
settings = Settings()
