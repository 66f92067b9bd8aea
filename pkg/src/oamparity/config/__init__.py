"""Configuration management for oamparity."""

from oamparity.config.settings import (
    OptimizerSettings,
    OracleSettings,
    Settings,
    ToleranceSettings,
    get_settings,
)

__all__ = [
    "OptimizerSettings",
    "OracleSettings",
    "Settings",
    "ToleranceSettings",
    "get_settings",
]
