"""Error-propagation sensitivity: closed forms per noise model and a numeric engine.

Every closed form has the shape

    delta_phi = sqrt(1 - A^2 / Q) / (A |X2| / Q^(3/2)) = sqrt(Q - A^2) Q / (A |X2|)

with Q the normalization (R1, K1 or H1), X2 its slope term, and A the dark-count
amplitude exp(-2d) (1 otherwise). Q - A^2 splits into a phase-independent floor
plus contrast * cos^2(theta), and X2 = ell * contrast * sin(2 theta). When the
floor is zero the common |cos theta| cancels, which removes the 0/0 at the
optimum theta = pi/2.
"""

import math
from collections.abc import Callable
from typing import NamedTuple

import numpy as np
import numpy.typing as npt

from oamparity.errors import ParameterError, ensure_finite
from oamparity.interferometer import (
    NoiseConfig,
    Scenario,
    Variant,
    h1,
    h2,
    k1,
    k2,
    r1,
    r2,
    signal_for,
)
from oamparity.sensitivity.models import SensitivityPoint

# |sin| below this is treated as an exact zero of the slope.
SLOPE_ZERO = 1e-12
# Numeric derivatives smaller than this report an unbounded sensitivity.
DERIVATIVE_ZERO = 1e-14
RICHARDSON_LEVELS = 4


class NoiseTerms(NamedTuple):
    """Phase-independent pieces of a closed-form sensitivity."""

    base: float
    floor: float
    contrast: float
    amplitude: float


def noise_terms(variant: Variant, scenario: Scenario, noise: NoiseConfig | None = None) -> NoiseTerms:
    """Split the normalization of ``variant`` into base, floor, contrast and amplitude."""
    noise = noise or NoiseConfig()
    n = scenario.mean_photon_number
    product = n * (n + 2.0)

    match Variant(variant):
        case Variant.IDEAL:
            return NoiseTerms(1.0, 0.0, product, 1.0)
        case Variant.LOSS:
            loss = noise.loss
            floor = 2.0 * n * loss * (1.0 - loss)
            return NoiseTerms(1.0 + floor, floor, (1.0 - loss) ** 2 * product, 1.0)
        case Variant.DARK:
            d = noise.dark_rate
            return NoiseTerms(1.0, -math.expm1(-4.0 * d), product, math.exp(-2.0 * d))
        case Variant.THERMAL:
            t, n_th = noise.transmissivity, noise.n_thermal
            nu = 2.0 * n_th + 1.0
            floor = (1.0 - t) * (-2.0 * t + 4.0 * n_th * (n_th + 1.0) * (1.0 - t) + 2.0 * nu * (n + 1.0))
            return NoiseTerms(1.0 + floor, floor, t * t * product, 1.0)
    raise ParameterError(f"unknown variant {variant!r}")


def _normalization_and_slope(
    variant: Variant, scenario: Scenario, noise: NoiseConfig
) -> tuple[float, float]:
    match Variant(variant):
        case Variant.IDEAL | Variant.DARK:
            return r1(scenario), r2(scenario)
        case Variant.LOSS:
            return k1(scenario, noise.loss), k2(scenario, noise.loss)
        case Variant.THERMAL:
            return (
                h1(scenario, noise.n_thermal, noise.transmissivity),
                h2(scenario, noise.transmissivity),
            )
    raise ParameterError(f"unknown variant {variant!r}")


def delta_phi_from_terms(
    terms: NoiseTerms,
    ell: int,
    theta: npt.ArrayLike,
    normalization: npt.ArrayLike | None = None,
    slope: npt.ArrayLike | None = None,
) -> npt.NDArray[np.float64]:
    """
    Vectorized closed-form sensitivity over phases ``theta`` = 2 ell phi.

    ``normalization`` and ``slope`` default to base + contrast cos^2 theta and
    ell contrast sin 2 theta.
    """
    theta = np.asarray(theta, dtype=float)
    cos_t, sin_t, sin_2t = np.cos(theta), np.sin(theta), np.sin(2.0 * theta)
    q = terms.base + terms.contrast * cos_t**2 if normalization is None else np.asarray(normalization)
    x2 = ell * terms.contrast * sin_2t if slope is None else np.asarray(slope)

    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        if terms.floor == 0.0:
            delta = q / (2.0 * terms.amplitude * ell * math.sqrt(terms.contrast) * np.abs(sin_t))
            unbounded = np.abs(sin_t) < SLOPE_ZERO
        else:
            excess = terms.floor + terms.contrast * cos_t**2
            delta = np.sqrt(excess) * q / (terms.amplitude * np.abs(x2))
            unbounded = np.abs(sin_2t) < SLOPE_ZERO

    unbounded = unbounded | (terms.contrast <= 0.0) | ~np.isfinite(delta)
    return np.where(unbounded, np.inf, delta)


def sensitivity_closed(
    variant: Variant, scenario: Scenario, noise: NoiseConfig | None = None
) -> SensitivityPoint:
    """
    Closed-form sensitivity of ``variant`` at ``scenario.phi``.

    Zero-slope points come back with ``delta_phi = inf`` instead of raising.
    """
    noise = noise or NoiseConfig()
    terms = noise_terms(variant, scenario, noise)
    normalization, slope = _normalization_and_slope(variant, scenario, noise)
    delta = delta_phi_from_terms(terms, scenario.ell, scenario.theta, normalization, slope)
    return SensitivityPoint(
        phi=scenario.phi,
        delta_phi=float(delta),
        signal=signal_for(variant, scenario, noise),
    )


def default_step(ell: int) -> float:
    """Initial finite-difference step: 1e-4 of the signal period pi / (2 ell)."""
    return 1e-4 * math.pi / (2.0 * ell)


def richardson_derivative(fn: Callable[[float], float], x: float, step: float) -> float:
    """Central differences at step, step/2, ... extrapolated to zero step."""
    table: list[list[float]] = []
    h = step
    for level in range(RICHARDSON_LEVELS):
        row = [(fn(x + h) - fn(x - h)) / (2.0 * h)]
        for order in range(1, level + 1):
            factor = 4.0**order
            row.append(row[order - 1] + (row[order - 1] - table[level - 1][order - 1]) / (factor - 1.0))
        table.append(row)
        h /= 2.0
    return table[-1][-1]


def sensitivity_numeric(
    signal_fn: Callable[[float], float], phi: float, step: float
) -> SensitivityPoint:
    """
    Sensitivity sqrt(1 - <Pi>^2) / |d<Pi>/dphi| with a numerical derivative.

    Works for any parity signal since Pi^2 is the identity.
    """
    phi = ensure_finite("phi", phi)
    step = ensure_finite("step", step)
    if step <= 0.0:
        raise ParameterError(f"step must be positive, got {step}")

    value = float(signal_fn(phi))
    derivative = richardson_derivative(signal_fn, phi, step)
    if not math.isfinite(derivative) or abs(derivative) < DERIVATIVE_ZERO:
        delta = math.inf
    else:
        delta = math.sqrt(max(0.0, 1.0 - value * value)) / abs(derivative)
        # signal rounds to exactly +-1: the uncertainty is below resolution
        if delta == 0.0:
            delta = math.inf
    return SensitivityPoint(phi=phi, delta_phi=delta, signal=value)
