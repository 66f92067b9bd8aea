"""Optical elements, full pipelines and closed-form signals of the OAM interferometer."""

from oamparity.interferometer.elements import (
    angular_displacement_transform,
    bs_transform,
    virtual_bs_transform,
)
from oamparity.interferometer.models import MAX_SQUEEZING, NoiseConfig, Scenario, Variant
from oamparity.interferometer.pipelines import (
    DETECTED_MODE,
    ideal_pipeline,
    loss_pipeline,
    thermal_pipeline,
)
from oamparity.interferometer.signals import (
    h1,
    h1_coupled,
    h2,
    k1,
    k2,
    r1,
    r2,
    signal_dark,
    signal_for,
    signal_ideal,
    signal_loss,
    signal_thermal,
    signal_thermal_coupled,
    visibility,
    visibility_from_values,
)

__all__ = [
    # Models
    "MAX_SQUEEZING",
    "NoiseConfig",
    "Scenario",
    "Variant",
    # Elements
    "angular_displacement_transform",
    "bs_transform",
    "virtual_bs_transform",
    # Pipelines
    "DETECTED_MODE",
    "ideal_pipeline",
    "loss_pipeline",
    "thermal_pipeline",
    # Closed forms
    "h1",
    "h1_coupled",
    "h2",
    "k1",
    "k2",
    "r1",
    "r2",
    "signal_dark",
    "signal_for",
    "signal_ideal",
    "signal_loss",
    "signal_thermal",
    "signal_thermal_coupled",
    "visibility",
    "visibility_from_values",
]
