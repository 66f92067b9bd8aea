"""Matrix routes: propagate the squeezed input through the full interferometer."""

from oamparity.gaussian import (
    GaussianState,
    apply_uniform_loss,
    chain,
    direct_sum,
    propagate,
    thermal_state,
    two_mode_squeezed_vacuum,
)
from oamparity.interferometer.elements import (
    angular_displacement_transform,
    bs_transform,
    virtual_bs_transform,
)
from oamparity.interferometer.models import Scenario
from oamparity.observability import get_logger

_logger = get_logger(__name__)

# Parity is read out on mode B of every pipeline.
DETECTED_MODE = 1


def ideal_pipeline(scenario: Scenario) -> GaussianState:
    """Two-mode output of BS1, the 2 ell phi rotation on arm A, then BS2."""
    transform = chain(
        bs_transform(),
        angular_displacement_transform(scenario.ell, scenario.phi),
        bs_transform(),
    )
    return propagate(two_mode_squeezed_vacuum(scenario.r), transform)


def loss_pipeline(scenario: Scenario, loss: float) -> GaussianState:
    """Ideal output followed by uniform loss ``loss`` in front of the detectors."""
    return apply_uniform_loss(ideal_pipeline(scenario), loss)


def thermal_pipeline(scenario: Scenario, n_thermal: float, transmissivity: float) -> GaussianState:
    """
    Four-mode output with each arm coupled to a thermal environment mode.

    The input is the squeezed pair next to two thermal modes of occupation
    ``n_thermal``; the virtual beam splitters of transmissivity ``transmissivity``
    sit between the rotation and BS2. Modes are ordered (A, B, E_A, E_B).
    """
    initial = direct_sum(
        two_mode_squeezed_vacuum(scenario.r),
        thermal_state(n_thermal, modes=2),
    )
    transform = chain(
        bs_transform(total_modes=4),
        angular_displacement_transform(scenario.ell, scenario.phi, total_modes=4),
        virtual_bs_transform(transmissivity),
        bs_transform(total_modes=4),
    )
    _logger.debug(
        "thermal_pipeline_built",
        r=scenario.r,
        ell=scenario.ell,
        n_thermal=n_thermal,
        transmissivity=transmissivity,
    )
    return propagate(initial, transform)
