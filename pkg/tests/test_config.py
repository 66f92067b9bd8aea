"""Tests for configuration module."""

import os
from unittest.mock import patch

import pytest
from pydantic import ValidationError


def test_settings_defaults():
    """Test that settings have sensible defaults."""
    # Clear any existing environment variables that might affect the test
    env_vars_to_clear = [
        "OAMPARITY_LOG_LEVEL",
        "OAMPARITY_JOBS",
        "OAMPARITY_OPTIMIZER_GRID_POINTS",
        "OAMPARITY_ORACLE_LEAKAGE",
    ]

    with patch.dict(os.environ, {}, clear=False):
        for name in env_vars_to_clear:
            os.environ.pop(name, None)

        # Need to clear the lru_cache to get fresh settings
        from oamparity.config.settings import get_settings

        get_settings.cache_clear()
        settings = get_settings()

        assert settings.log_level == "INFO"
        assert settings.jobs == 1
        assert settings.optimizer.grid_points == 2000
        assert settings.optimizer.xatol == 1e-10
        assert settings.oracle.leakage_target == 1e-12
        assert settings.oracle.max_terms == 128

    get_settings.cache_clear()


def test_settings_from_environment():
    """Test that settings are read from environment variables."""
    from oamparity.config.settings import get_settings

    env = {"OAMPARITY_JOBS": "4", "OAMPARITY_OPTIMIZER_GRID_POINTS": "5000"}
    with patch.dict(os.environ, env, clear=False):
        get_settings.cache_clear()
        settings = get_settings()

        assert settings.jobs == 4
        assert settings.optimizer.grid_points == 5000

    get_settings.cache_clear()


def test_optimizer_grid_lower_bound():
    """Test that the optimizer refuses coarse grids."""
    from oamparity.config.settings import OptimizerSettings

    with pytest.raises(ValidationError):
        OptimizerSettings(OAMPARITY_OPTIMIZER_GRID_POINTS=10)  # type: ignore[call-arg]


def test_tolerance_defaults_and_prefix():
    """Test tolerance defaults and the OAMPARITY_TOL_ prefix."""
    from oamparity.config.settings import ToleranceSettings

    tolerances = ToleranceSettings()
    assert tolerances.ideal_matrix == 1e-12
    assert tolerances.loss_optimum_value == 1e-3
    assert tolerances.heisenberg_value == 2e-3
    assert tolerances.heisenberg_gap == 3e-4

    with patch.dict(os.environ, {"OAMPARITY_TOL_ORACLE_IDEAL": "1e-7"}, clear=False):
        assert ToleranceSettings().oracle_ideal == 1e-7
