"""Application settings using Pydantic Settings."""

from functools import lru_cache
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class OptimizerSettings(BaseSettings):
    """Grid-plus-refinement search over one signal period."""

    model_config = SettingsConfigDict(env_file=".env", extra="ignore")

    grid_points: int = Field(default=2000, ge=1000, alias="OAMPARITY_OPTIMIZER_GRID_POINTS")
    xatol: float = Field(default=1e-10, gt=0, alias="OAMPARITY_OPTIMIZER_XATOL")


class OracleSettings(BaseSettings):
    """Truncated Fock-space oracle configuration."""

    model_config = SettingsConfigDict(env_file=".env", extra="ignore")

    leakage_target: float = Field(default=1e-12, gt=0, lt=1, alias="OAMPARITY_ORACLE_LEAKAGE")
    max_terms: int = Field(default=128, ge=1, alias="OAMPARITY_ORACLE_MAX_TERMS")


class ToleranceSettings(BaseSettings):
    """Acceptance tolerances used by ``oamparity validate``.

    Field names double as the ``--tolerance name=value`` keys.
    """

    model_config = SettingsConfigDict(
        env_file=".env", env_prefix="OAMPARITY_TOL_", extra="ignore"
    )

    ideal_matrix: float = 1e-12
    loss_matrix: float = 1e-12
    thermal_matrix: float = 1e-12
    thermal_reference_offset: float = 1e-12
    oracle_ideal: float = 1e-8
    oracle_strong_squeezing: float = 1e-6
    reductions: float = 1e-12
    ideal_optimum_phase: float = 1e-6
    ideal_optimum_value: float = 1e-9
    heisenberg_value: float = 2e-3
    loss_optimum_value: float = 1e-3
    heisenberg_gap: float = 3e-4
    ell_scaling: float = 1e-9
    visibility_closed: float = 1e-9
    visibility_oracle: float = 1e-6
    dark_ratio: float = 1e-15
    dark_near_heisenberg: float = 2e-2
    noise_monotone: float = 1e-12
    thermal_loss_ordering: float = 1e-12
    numeric_derivative: float = 1e-8


class Settings(BaseSettings):
    """Main application settings."""

    model_config = SettingsConfigDict(env_file=".env", extra="ignore")

    # Execution settings
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = Field(
        default="INFO", alias="OAMPARITY_LOG_LEVEL"
    )
    jobs: int = Field(default=1, ge=1, alias="OAMPARITY_JOBS")

    # Sub-configurations
    optimizer: OptimizerSettings = Field(default_factory=OptimizerSettings)
    oracle: OracleSettings = Field(default_factory=OracleSettings)
    tolerances: ToleranceSettings = Field(default_factory=ToleranceSettings)


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
