"""Result types for sensitivity evaluation."""

import math
from typing import NamedTuple

from pydantic import BaseModel, ConfigDict, Field


class SensitivityPoint(BaseModel):
    """Error-propagation sensitivity at one working point.

    ``delta_phi`` is ``inf`` where the signal slope vanishes.
    """

    model_config = ConfigDict(frozen=True)

    phi: float = Field(description="Angular displacement (rad)")
    delta_phi: float = Field(gt=0.0, description="Sensitivity (rad), inf when unbounded")
    signal: float = Field(description="Parity expectation at phi")

    @property
    def bounded(self) -> bool:
        return math.isfinite(self.delta_phi)


class LimitSet(BaseModel):
    """Reference sensitivities for a given N and ell."""

    model_config = ConfigDict(frozen=True)

    heisenberg: float = Field(description="1 / (2 ell N)")
    shot_noise: float = Field(description="1 / (2 ell sqrt N)")
    min_sensitivity: float = Field(description="1 / (2 ell sqrt(N (N + 2)))")


class Optimum(NamedTuple):
    phi_opt: float
    delta_phi_min: float
