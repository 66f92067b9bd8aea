"""Closed-form parity signals on mode B for every noise model.

All expressions depend on the displacement only through theta = 2 ell phi, so
cos(4 ell phi) and sin(4 ell phi) are evaluated as cos(2 theta) and sin(2 theta).
Each signal is 1/sqrt(X1) for its normalization X1; the companion X2 is the
slope term, with d<Pi>/dphi = X2 / X1^(3/2).
"""

import math
from collections.abc import Iterable

import numpy as np

from oamparity.errors import ParameterError, ensure_fraction, ensure_non_negative
from oamparity.interferometer.models import NoiseConfig, Scenario, Variant


def _squeezing_product(scenario: Scenario) -> float:
    """N (N + 2), which equals sinh^2 2r."""
    n = scenario.mean_photon_number
    return n * (n + 2.0)


def r1(scenario: Scenario) -> float:
    return 1.0 + _squeezing_product(scenario) * math.cos(scenario.theta) ** 2


def r2(scenario: Scenario) -> float:
    return scenario.ell * _squeezing_product(scenario) * math.sin(2.0 * scenario.theta)


def k1(scenario: Scenario, loss: float) -> float:
    loss = ensure_fraction("loss", loss)
    n = scenario.mean_photon_number
    return (
        1.0
        + 0.5 * (1.0 - loss) ** 2 * (_squeezing_product(scenario) * math.cos(2.0 * scenario.theta) + n * n)
        + (1.0 - loss * loss) * n
    )


def k2(scenario: Scenario, loss: float) -> float:
    loss = ensure_fraction("loss", loss)
    return (1.0 - loss) ** 2 * r2(scenario)


def h1(scenario: Scenario, n_thermal: float, transmissivity: float) -> float:
    """Thermal normalization in its reference form (exact only at T = 1)."""
    n_th = ensure_non_negative("n_thermal", n_thermal)
    t = ensure_fraction("transmissivity", transmissivity)
    n = scenario.mean_photon_number
    theta = scenario.theta
    bracket = (
        2.0 * math.cos(theta) ** 2 * (2.0 * _squeezing_product(scenario) + 1.0)
        - math.cos(2.0 * theta)
        + 7.0
    )
    return (
        t * t / 4.0 * bracket
        + 1.0
        + 4.0 * (n_th * n_th + n_th) * (1.0 - t) ** 2
        - 2.0 * t
        + 2.0 * (2.0 * n_th + 1.0) * (1.0 - t) * (n + 1.0)
    )


def h1_coupled(scenario: Scenario, n_thermal: float, transmissivity: float) -> float:
    """
    Determinant of the mode-B block produced by the eight-mode thermal pipeline.

    Differs from :func:`h1` by 2 (2 n_th + 1)(1 - T)^2 (N + 1).
    """
    n_th = ensure_non_negative("n_thermal", n_thermal)
    t = ensure_fraction("transmissivity", transmissivity)
    offset = 2.0 * (2.0 * n_th + 1.0) * (1.0 - t) ** 2 * (scenario.mean_photon_number + 1.0)
    return h1(scenario, n_th, t) - offset


def h2(scenario: Scenario, transmissivity: float) -> float:
    t = ensure_fraction("transmissivity", transmissivity)
    return t * t * r2(scenario)


def signal_ideal(scenario: Scenario) -> float:
    """Lossless parity signal 1/sqrt(1 + N(N+2) cos^2(2 ell phi))."""
    return 1.0 / math.sqrt(r1(scenario))


def signal_loss(scenario: Scenario, loss: float) -> float:
    return 1.0 / math.sqrt(k1(scenario, loss))


def signal_dark(scenario: Scenario, dark_rate: float) -> float:
    """Ideal signal damped by exp(-2d) from Poissonian dark counts at rate ``dark_rate``."""
    d = ensure_non_negative("dark_rate", dark_rate)
    return math.exp(-2.0 * d) * signal_ideal(scenario)


def signal_thermal(scenario: Scenario, n_thermal: float, transmissivity: float) -> float:
    return 1.0 / math.sqrt(h1(scenario, n_thermal, transmissivity))


def signal_thermal_coupled(scenario: Scenario, n_thermal: float, transmissivity: float) -> float:
    return 1.0 / math.sqrt(h1_coupled(scenario, n_thermal, transmissivity))


def signal_for(variant: Variant, scenario: Scenario, noise: NoiseConfig | None = None) -> float:
    """Dispatch to the closed-form signal of ``variant``."""
    noise = noise or NoiseConfig()
    match Variant(variant):
        case Variant.IDEAL:
            return signal_ideal(scenario)
        case Variant.LOSS:
            return signal_loss(scenario, noise.loss)
        case Variant.DARK:
            return signal_dark(scenario, noise.dark_rate)
        case Variant.THERMAL:
            return signal_thermal(scenario, noise.n_thermal, noise.transmissivity)
    raise ParameterError(f"unknown variant {variant!r}")


def visibility(scenario: Scenario) -> float:
    """Fringe visibility N / (N + 2) of the lossless signal."""
    n = scenario.mean_photon_number
    return n / (n + 2.0)


def visibility_from_values(values: Iterable[float]) -> float:
    """(max - min) / (max + min) of sampled signal values."""
    samples = np.fromiter(values, dtype=float)
    if samples.size == 0:
        raise ParameterError("visibility needs at least one sample")
    high, low = float(samples.max()), float(samples.min())
    if high + low == 0.0:
        raise ParameterError("visibility is undefined when max + min == 0")
    return (high - low) / (high + low)
