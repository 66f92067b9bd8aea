"""Self-validation: cross-checks between closed forms, matrix routes and the Fock oracle.

Each check measures one non-negative deviation and compares it with the
tolerance of the same name in :class:`ToleranceSettings`.
"""

import math
from collections.abc import Callable, Iterator, Mapping
from itertools import product

import numpy as np
from pydantic import BaseModel, ConfigDict

from oamparity.config.settings import ToleranceSettings, get_settings
from oamparity.errors import OamParityError, ParameterError
from oamparity.gaussian import parity_expectation
from oamparity.interferometer import (
    DETECTED_MODE,
    NoiseConfig,
    Scenario,
    Variant,
    h1,
    h2,
    ideal_pipeline,
    k1,
    k2,
    loss_pipeline,
    r1,
    r2,
    signal_dark,
    signal_for,
    signal_ideal,
    signal_loss,
    signal_thermal_coupled,
    thermal_pipeline,
    visibility,
    visibility_from_values,
)
from oamparity.observability.logging import get_logger
from oamparity.oracle import default_cutoff, run_ideal_oracle
from oamparity.sensitivity import (
    default_step,
    limits,
    optimal_sensitivity,
    sensitivity_closed,
    sensitivity_numeric,
)

_logger = get_logger(__name__)

# Reference values for r = 1, ell = 1.
REFERENCE_HEISENBERG = 0.1809
REFERENCE_LOSS_OPTIMUM = 0.1968
REFERENCE_HEISENBERG_GAP = 1.59e-2

GRID_R = (0.1, 0.5, 1.0, 1.5)
GRID_ELL = (1, 2, 5, 10)
GRID_PHI_POINTS = 50


class ValidationCheck(BaseModel):
    """Outcome of one cross-check."""

    model_config = ConfigDict(frozen=True)

    name: str
    description: str
    measured: float
    tolerance: float
    passed: bool
    error: str | None = None


class ValidationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    checks: list[ValidationCheck]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> list[ValidationCheck]:
        return [check for check in self.checks if not check.passed]


def _relative(value: float, reference: float) -> float:
    return abs(value - reference) / max(1.0, abs(reference))


def _grid_scenarios(
    r_values: tuple[float, ...] = GRID_R,
    ell_values: tuple[int, ...] = GRID_ELL,
    points: int = GRID_PHI_POINTS,
) -> Iterator[Scenario]:
    """Scenarios over r, ell and ``points`` phases spanning [0, pi / ell]."""
    for r, ell in product(r_values, ell_values):
        for phi in np.linspace(0.0, math.pi / ell, points):
            yield Scenario(r=r, ell=ell, phi=float(phi))


def _slope_grid(ell: int, points: int = 10) -> np.ndarray:
    # offset from every zero of the signal slope at multiples of pi / (4 ell)
    return (np.arange(points) + 0.3) / points * math.pi / (2.0 * ell)


# --- closed form vs matrix route -------------------------------------------------


def check_ideal_matrix() -> float:
    return max(
        abs(parity_expectation(ideal_pipeline(s), DETECTED_MODE) - signal_ideal(s))
        for s in _grid_scenarios()
    )


def check_loss_matrix() -> float:
    return max(
        abs(parity_expectation(loss_pipeline(s, loss), DETECTED_MODE) - signal_loss(s, loss))
        for s in _grid_scenarios()
        for loss in (0.01, 0.05)
    )


THERMAL_CASES = ((0.1, 0.99), (0.1, 0.97), (0.5, 0.9))


def check_thermal_matrix() -> float:
    return max(
        abs(
            parity_expectation(thermal_pipeline(s, n_th, t), DETECTED_MODE)
            - signal_thermal_coupled(s, n_th, t)
        )
        for s in _grid_scenarios()
        for n_th, t in THERMAL_CASES
    )


def check_thermal_reference_offset() -> float:
    """Reference H1 exceeds the pipeline's mode-B determinant by 2 (2n+1)(1-T)^2 (N+1)."""
    deviation = 0.0
    for s in _grid_scenarios():
        for n_th, t in THERMAL_CASES:
            block = thermal_pipeline(s, n_th, t).covariance[2:4, 2:4]
            determinant = float(np.linalg.det(block))
            reference = h1(s, n_th, t)
            offset = 2.0 * (2.0 * n_th + 1.0) * (1.0 - t) ** 2 * (s.mean_photon_number + 1.0)
            deviation = max(deviation, abs(reference - determinant - offset) / max(1.0, reference))
    return deviation


# --- Fock oracle ----------------------------------------------------------------


def _oracle_deviation(r_values: tuple[float, ...]) -> float:
    deviation = 0.0
    for s in _grid_scenarios(r_values, (1, 3)):
        result = run_ideal_oracle(s, default_cutoff(s.r))
        deviation = max(deviation, abs(result.parity - signal_ideal(s)))
    return deviation


def check_oracle_ideal() -> float:
    return _oracle_deviation((0.2, 0.5, 0.8))


def check_oracle_strong_squeezing() -> float:
    return _oracle_deviation((1.0,))


# --- algebraic reductions ---------------------------------------------------------


def check_reductions() -> float:
    deviation = 0.0
    for s in _grid_scenarios():
        deviation = max(
            deviation,
            _relative(k1(s, 0.0), r1(s)),
            _relative(k2(s, 0.0), r2(s)),
            _relative(h1(s, 0.0, 1.0), r1(s)),
            _relative(h2(s, 1.0), r2(s)),
        )
    return deviation


# --- optimum and reference numbers -------------------------------------------------------


def _ideal_optima() -> Iterator[tuple[Scenario, float, float]]:
    for r, ell in product(GRID_R, GRID_ELL):
        scenario = Scenario(r=r, ell=ell)
        phi_opt, delta_min = optimal_sensitivity(Variant.IDEAL, scenario)
        yield scenario, phi_opt, delta_min


def check_ideal_optimum_phase() -> float:
    return max(abs(phi - math.pi / (4.0 * s.ell)) for s, phi, _ in _ideal_optima())


def check_ideal_optimum_value() -> float:
    return max(
        abs(delta - limits(s).min_sensitivity) / limits(s).min_sensitivity
        for s, _, delta in _ideal_optima()
    )


def check_heisenberg_value() -> float:
    return abs(limits(Scenario(r=1.0)).heisenberg - REFERENCE_HEISENBERG)


def _loss_optimum() -> float:
    return optimal_sensitivity(Variant.LOSS, Scenario(r=1.0), NoiseConfig(loss=0.01)).delta_phi_min


def check_loss_optimum_value() -> float:
    return abs(_loss_optimum() - REFERENCE_LOSS_OPTIMUM)


def check_heisenberg_gap() -> float:
    gap = _loss_optimum() - limits(Scenario(r=1.0)).heisenberg
    return abs(gap - REFERENCE_HEISENBERG_GAP)


SCALING_CASES = (
    (Variant.IDEAL, NoiseConfig()),
    (Variant.LOSS, NoiseConfig(loss=0.01)),
    (Variant.DARK, NoiseConfig(dark_rate=0.05)),
    (Variant.THERMAL, NoiseConfig(n_thermal=0.1, transmissivity=0.97)),
)


def check_ell_scaling() -> float:
    """Relative spread of ell * delta_phi_min over ell = 1, 2, 10 for every variant."""
    deviation = 0.0
    for (variant, noise), r in product(SCALING_CASES, np.linspace(0.5, 1.5, 11)):
        base = optimal_sensitivity(variant, Scenario(r=float(r), ell=1), noise).delta_phi_min
        for ell in (2, 10):
            scaled = optimal_sensitivity(variant, Scenario(r=float(r), ell=ell), noise).delta_phi_min
            deviation = max(deviation, abs(ell * scaled / base - 1.0))
    return deviation


# --- visibility -------------------------------------------------------------------


def check_visibility_closed() -> float:
    deviation = 0.0
    for r, ell in product((0.5, 1.0, 1.5), (1, 2)):
        base = Scenario(r=r, ell=ell)
        phis = np.linspace(0.0, math.pi / (2.0 * ell), 201)
        sampled = visibility_from_values(signal_ideal(base.with_phi(float(p))) for p in phis)
        deviation = max(deviation, abs(sampled - visibility(base)))
    return deviation


def check_visibility_oracle() -> float:
    base = Scenario(r=1.0)
    cutoff = default_cutoff(base.r)
    phis = np.linspace(0.0, math.pi / 2.0, 51)
    sampled = visibility_from_values(run_ideal_oracle(base.with_phi(float(p)), cutoff).parity for p in phis)
    return abs(sampled - visibility(base))


# --- dark counts -------------------------------------------------------------------


def check_dark_ratio() -> float:
    return max(
        abs(signal_dark(s, d) / signal_ideal(s) - math.exp(-2.0 * d))
        for s in _grid_scenarios()
        for d in (0.01, 0.1)
    )


def check_dark_near_heisenberg() -> float:
    scenario = Scenario(r=1.0)
    optimum = optimal_sensitivity(Variant.DARK, scenario, NoiseConfig(dark_rate=0.01)).delta_phi_min
    heisenberg = limits(scenario).heisenberg
    return abs(optimum - heisenberg) / heisenberg


# --- noise ordering ------------------------------------------------------------------


def _worst_drop(values: list[float]) -> float:
    """Largest drop between consecutive values (0 for a non-decreasing sequence)."""
    return max([0.0] + [before - after for before, after in zip(values, values[1:], strict=False)])


def check_noise_monotone() -> float:
    scenario = Scenario(r=1.0)

    def optimum(variant: Variant, noise: NoiseConfig) -> float:
        return optimal_sensitivity(variant, scenario, noise).delta_phi_min

    sequences = [
        [optimum(Variant.LOSS, NoiseConfig(loss=loss)) for loss in (0.0, 0.01, 0.03, 0.1)],
        [optimum(Variant.DARK, NoiseConfig(dark_rate=d)) for d in (0.0, 0.01, 0.1)],
        [
            optimum(Variant.THERMAL, NoiseConfig(n_thermal=n_th, transmissivity=0.99))
            for n_th in (0.0, 0.1, 0.5)
        ],
    ]
    return max(_worst_drop(values) for values in sequences)


def check_thermal_loss_ordering() -> float:
    """Positive part of K1(L) - H1(n_th=0, T=1-L); zero when the ordering holds."""
    return max(
        max(0.0, k1(s, loss) - h1(s, 0.0, 1.0 - loss))
        for s in _grid_scenarios()
        for loss in (0.01, 0.05, 0.2)
    )


# --- numeric derivative ---------------------------------------------------------------

NUMERIC_NOISE = {
    Variant.IDEAL: NoiseConfig(),
    Variant.LOSS: NoiseConfig(loss=0.05),
    Variant.DARK: NoiseConfig(dark_rate=0.1),
    Variant.THERMAL: NoiseConfig(n_thermal=0.1, transmissivity=0.97),
}


def check_numeric_derivative() -> float:
    deviation = 0.0
    for (variant, noise), r, ell in product(NUMERIC_NOISE.items(), (0.5, 1.0), (1, 3)):
        base = Scenario(r=r, ell=ell)

        def signal(
            phi: float, variant: Variant = variant, noise: NoiseConfig = noise, base: Scenario = base
        ) -> float:
            return signal_for(variant, base.with_phi(phi), noise)

        for phi in _slope_grid(ell):
            closed = sensitivity_closed(variant, base.with_phi(float(phi)), noise).delta_phi
            numeric = sensitivity_numeric(signal, float(phi), default_step(ell)).delta_phi
            deviation = max(deviation, abs(numeric - closed) / closed)
    return deviation


CHECKS: dict[str, tuple[str, Callable[[], float]]] = {
    "ideal_matrix": ("ideal pipeline parity vs closed form", check_ideal_matrix),
    "loss_matrix": ("loss pipeline parity vs closed form", check_loss_matrix),
    "thermal_matrix": ("eight-mode thermal pipeline vs coupled closed form", check_thermal_matrix),
    "thermal_reference_offset": ("reference H1 minus pipeline determinant (relative)", check_thermal_reference_offset),
    "oracle_ideal": ("Fock oracle vs closed form, r <= 0.8", check_oracle_ideal),
    "oracle_strong_squeezing": ("Fock oracle vs closed form, r = 1", check_oracle_strong_squeezing),
    "reductions": ("K and H reduce to R without noise", check_reductions),
    "ideal_optimum_phase": ("lossless optimum at pi/(4 ell)", check_ideal_optimum_phase),
    "ideal_optimum_value": ("lossless optimum value (relative)", check_ideal_optimum_value),
    "heisenberg_value": ("HL at r=1 vs reference 0.1809", check_heisenberg_value),
    "loss_optimum_value": ("optimum at L=0.01 vs reference 0.1968", check_loss_optimum_value),
    "heisenberg_gap": ("gap to HL at L=0.01 vs reference 1.59e-2", check_heisenberg_gap),
    "ell_scaling": ("optimal sensitivity scales as 1/ell", check_ell_scaling),
    "visibility_closed": ("visibility from closed-form sweep", check_visibility_closed),
    "visibility_oracle": ("visibility from Fock oracle sweep", check_visibility_oracle),
    "dark_ratio": ("dark-count signal ratio equals exp(-2d)", check_dark_ratio),
    "dark_near_heisenberg": ("dark-count optimum near HL (relative)", check_dark_near_heisenberg),
    "noise_monotone": ("optimum non-decreasing in L, d and n_th", check_noise_monotone),
    "thermal_loss_ordering": ("H1(T=1-L) >= K1(L)", check_thermal_loss_ordering),
    "numeric_derivative": ("numeric vs closed-form sensitivity (relative)", check_numeric_derivative),
}


def resolve_tolerances(overrides: Mapping[str, float] | None = None) -> ToleranceSettings:
    """Settings tolerances with ``overrides`` applied; unknown names are rejected."""
    tolerances = get_settings().tolerances
    if not overrides:
        return tolerances
    unknown = set(overrides) - set(ToleranceSettings.model_fields)
    if unknown:
        raise ParameterError(f"unknown tolerance name(s): {', '.join(sorted(unknown))}")
    for name, value in overrides.items():
        if not value > 0.0 or not math.isfinite(value):
            raise ParameterError(f"tolerance {name} must be a positive finite number, got {value}")
    return tolerances.model_copy(update=dict(overrides))


def run_check(name: str, tolerance: float) -> ValidationCheck:
    description, fn = CHECKS[name]
    try:
        measured = float(fn())
        error = None
    except (OamParityError, ValueError, ArithmeticError, np.linalg.LinAlgError) as exc:
        measured, error = math.nan, f"{type(exc).__name__}: {exc}"

    passed = math.isfinite(measured) and measured <= tolerance
    _logger.info("check_finished", check=name, measured=measured, tolerance=tolerance, passed=passed)
    return ValidationCheck(
        name=name,
        description=description,
        measured=measured,
        tolerance=tolerance,
        passed=passed,
        error=error,
    )


def run_validation(overrides: Mapping[str, float] | None = None) -> ValidationReport:
    """Run every check against the (possibly overridden) tolerances."""
    tolerances = resolve_tolerances(overrides)
    checks = [run_check(name, getattr(tolerances, name)) for name in CHECKS]
    report = ValidationReport(checks=checks)
    _logger.info("validation_finished", checks=len(checks), failed=len(report.failures))
    return report
