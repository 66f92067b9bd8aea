"""Optimal working point, reference limits and the Heisenberg gap."""

import math

import numpy as np
from scipy.optimize import minimize_scalar

from oamparity.config.settings import get_settings
from oamparity.errors import ParameterError
from oamparity.interferometer import NoiseConfig, Scenario, Variant
from oamparity.observability import get_logger
from oamparity.sensitivity.estimators import (
    delta_phi_from_terms,
    noise_terms,
    sensitivity_closed,
)
from oamparity.sensitivity.models import LimitSet, Optimum

_logger = get_logger(__name__)


def optimal_sensitivity(
    variant: Variant,
    scenario: Scenario,
    noise: NoiseConfig | None = None,
    grid_points: int | None = None,
    xatol: float | None = None,
) -> Optimum:
    """
    Minimize the closed-form sensitivity over phi in (0, pi / (2 ell)).

    ``scenario.phi`` is ignored. A uniform grid in theta = 2 ell phi locates the
    best sample, then a bounded scalar search between its neighbours refines it.

    Args:
        variant: Noise model.
        scenario: Squeezing and OAM number; the phase is searched.
        noise: Noise parameters, ideal by default.
        grid_points: Coarse grid size. Defaults to the optimizer settings.
        xatol: Absolute phi tolerance of the refinement. Defaults to settings.

    Returns:
        ``Optimum(phi_opt, delta_phi_min)``; ``delta_phi_min`` is inf when the
        signal carries no phase information.
    """
    settings = get_settings().optimizer
    grid_points = grid_points or settings.grid_points
    xatol = xatol or settings.xatol
    if grid_points < 3:
        raise ParameterError(f"grid_points must be >= 3, got {grid_points}")

    noise = noise or NoiseConfig()
    ell = scenario.ell
    terms = noise_terms(variant, scenario, noise)

    theta = np.linspace(0.0, math.pi, grid_points + 2)[1:-1]
    values = delta_phi_from_terms(terms, ell, theta)
    best = int(np.argmin(values))
    if not math.isfinite(values[best]):
        return Optimum(math.pi / (4.0 * ell), math.inf)

    period = math.pi / (2.0 * ell)
    step = period / (grid_points + 1)
    lower = max(theta[best] / (2.0 * ell) - step, 0.5 * step)
    upper = min(theta[best] / (2.0 * ell) + step, period - 0.5 * step)

    def objective(phi: float) -> float:
        return float(delta_phi_from_terms(terms, ell, 2.0 * ell * phi))

    result = minimize_scalar(objective, bounds=(lower, upper), method="bounded", options={"xatol": xatol})
    phi_opt = float(result.x)
    point = sensitivity_closed(variant, scenario.with_phi(phi_opt), noise)

    _logger.debug(
        "optimum_found",
        variant=Variant(variant).value,
        r=scenario.r,
        ell=ell,
        phi_opt=phi_opt,
        delta_phi_min=point.delta_phi,
    )
    return Optimum(phi_opt, point.delta_phi)


def limits(scenario: Scenario) -> LimitSet:
    """Heisenberg, shot-noise and lossless minimum sensitivities for N and ell."""
    n = scenario.mean_photon_number
    if n == 0.0:
        return LimitSet(heisenberg=math.inf, shot_noise=math.inf, min_sensitivity=math.inf)
    scale = 2.0 * scenario.ell
    return LimitSet(
        heisenberg=1.0 / (scale * n),
        shot_noise=1.0 / (scale * math.sqrt(n)),
        min_sensitivity=1.0 / (scale * math.sqrt(n * (n + 2.0))),
    )


def hl_gap(variant: Variant, scenario: Scenario, noise: NoiseConfig | None = None) -> float:
    """Optimal sensitivity minus the Heisenberg limit; negative means sub-Heisenberg."""
    return optimal_sensitivity(variant, scenario, noise).delta_phi_min - limits(scenario).heisenberg


def repetition_equivalent(ell: int) -> int:
    """Repetitions of an ell = 0 measurement matching one OAM-ell shot: 4 ell^2."""
    if ell < 1:
        raise ParameterError(f"ell must be >= 1, got {ell}")
    return 4 * ell * ell
