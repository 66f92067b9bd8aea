"""Parameter sweeps over phi (signal, sensitivity) and over r (optimal sensitivity)."""

import math
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from oamparity.config.settings import get_settings
from oamparity.errors import ParameterError
from oamparity.interferometer import MAX_SQUEEZING, NoiseConfig, Scenario, Variant, signal_for
from oamparity.observability.logging import get_logger
from oamparity.sensitivity import limits, optimal_sensitivity, sensitivity_closed

_logger = get_logger(__name__)

T = TypeVar("T")
R = TypeVar("R")

SIGNAL_COLUMNS = ("phi", "signal")
SENSITIVITY_COLUMNS = ("phi", "delta_phi", "signal")
OPTIMAL_COLUMNS = ("r", "N", "phi_opt", "delta_phi_min", "hl", "snl")


class SweepSpec(BaseModel):
    """What to sweep: variant, scenario ranges and noise values."""

    model_config = ConfigDict(frozen=True)

    variant: Variant = Field(default=Variant.IDEAL)

    # Scenario, given by r or by N
    r: float | None = Field(default=None, ge=0.0, le=MAX_SQUEEZING, allow_inf_nan=False)
    nbar: float | None = Field(default=None, ge=0.0, allow_inf_nan=False)
    ell: int = Field(default=1, ge=1)

    # phi grid; defaults to one signal period [0, pi / (2 ell)]
    phi_min: float | None = Field(default=None, allow_inf_nan=False)
    phi_max: float | None = Field(default=None, allow_inf_nan=False)
    phi_steps: int = Field(default=201, ge=2)

    # r grid for optimal sweeps
    r_min: float = Field(default=0.5, ge=0.0, le=MAX_SQUEEZING, allow_inf_nan=False)
    r_max: float = Field(default=1.5, ge=0.0, le=MAX_SQUEEZING, allow_inf_nan=False)
    r_steps: int = Field(default=11, ge=2)

    noise: NoiseConfig = Field(default_factory=NoiseConfig)
    jobs: int | None = Field(default=None, ge=1)

    @model_validator(mode="after")
    def _check_consistency(self) -> "SweepSpec":
        if self.r is not None and self.nbar is not None:
            raise ValueError("give either r or nbar, not both")
        extra = self.noise.model_fields_set - set(self.variant.noise_fields)
        if extra:
            raise ValueError(
                f"variant '{self.variant.value}' does not accept noise field(s): {', '.join(sorted(extra))}"
            )
        if self.phi_bounds[1] <= self.phi_bounds[0]:
            raise ValueError("phi_max must be greater than phi_min")
        if self.r_max <= self.r_min:
            raise ValueError("r_max must be greater than r_min")
        return self

    @property
    def phi_bounds(self) -> tuple[float, float]:
        low = 0.0 if self.phi_min is None else self.phi_min
        high = math.pi / (2.0 * self.ell) if self.phi_max is None else self.phi_max
        return low, high

    def phi_grid(self) -> np.ndarray:
        return np.linspace(*self.phi_bounds, self.phi_steps)

    def r_grid(self) -> np.ndarray:
        return np.linspace(self.r_min, self.r_max, self.r_steps)

    def scenario(self, phi: float = 0.0) -> Scenario:
        """The fixed-squeezing scenario of a phi sweep."""
        if self.nbar is not None:
            return Scenario.from_photon_number(self.nbar, ell=self.ell, phi=phi)
        if self.r is None:
            raise ParameterError("a phi sweep needs r or nbar")
        return Scenario(r=self.r, ell=self.ell, phi=phi)


class SweepResult(BaseModel):
    """Rows of one sweep, in grid order."""

    model_config = ConfigDict(frozen=True)

    variant: Variant
    columns: tuple[str, ...]
    rows: list[tuple[float, ...]]

    def column(self, name: str) -> np.ndarray:
        index = self.columns.index(name)
        return np.array([row[index] for row in self.rows])


def map_ordered(fn: Callable[[T], R], items: Sequence[T], jobs: int | None = None) -> list[R]:
    """Apply ``fn`` to ``items`` on ``jobs`` threads; results keep item order."""
    workers = jobs or get_settings().jobs
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _finish(spec: SweepSpec, columns: tuple[str, ...], rows: Iterable[tuple[float, ...]]) -> SweepResult:
    result = SweepResult(variant=spec.variant, columns=columns, rows=list(rows))
    _logger.info("sweep_finished", variant=spec.variant.value, columns=",".join(columns), rows=len(result.rows))
    return result


def run_signal_sweep(spec: SweepSpec) -> SweepResult:
    """Closed-form parity signal at each phi of the grid."""
    base = spec.scenario()

    def evaluate(phi: float) -> tuple[float, float]:
        return phi, signal_for(spec.variant, base.with_phi(phi), spec.noise)

    return _finish(spec, SIGNAL_COLUMNS, map_ordered(evaluate, spec.phi_grid().tolist(), spec.jobs))


def run_sensitivity_sweep(spec: SweepSpec) -> SweepResult:
    """Closed-form sensitivity and signal at each phi; zero-slope points are inf."""
    base = spec.scenario()

    def evaluate(phi: float) -> tuple[float, float, float]:
        point = sensitivity_closed(spec.variant, base.with_phi(phi), spec.noise)
        return phi, point.delta_phi, point.signal

    return _finish(spec, SENSITIVITY_COLUMNS, map_ordered(evaluate, spec.phi_grid().tolist(), spec.jobs))


def run_optimal_sweep(spec: SweepSpec) -> SweepResult:
    """Optimal working point and reference limits for each r of the grid."""

    def evaluate(r: float) -> tuple[float, ...]:
        scenario = Scenario(r=r, ell=spec.ell)
        optimum = optimal_sensitivity(spec.variant, scenario, spec.noise)
        reference = limits(scenario)
        return (
            r,
            scenario.mean_photon_number,
            optimum.phi_opt,
            optimum.delta_phi_min,
            reference.heisenberg,
            reference.shot_noise,
        )

    return _finish(spec, OPTIMAL_COLUMNS, map_ordered(evaluate, spec.r_grid().tolist(), spec.jobs))
