"""Physical configuration of the OAM interferometer and its noise channels."""

import math
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field

from oamparity.errors import ensure_finite, ensure_non_negative

# Keeps N, cosh 2r and their low powers finite in double precision.
MAX_SQUEEZING = 50.0


class Variant(str, Enum):
    """Which noise model a signal or sensitivity is evaluated under."""

    IDEAL = "ideal"
    LOSS = "loss"
    DARK = "dark"
    THERMAL = "thermal"

    @property
    def noise_fields(self) -> tuple[str, ...]:
        """``NoiseConfig`` fields this variant reads."""
        return _NOISE_FIELDS[self]


_NOISE_FIELDS: dict[Variant, tuple[str, ...]] = {
    Variant.IDEAL: (),
    Variant.LOSS: ("loss",),
    Variant.DARK: ("dark_rate",),
    Variant.THERMAL: ("n_thermal", "transmissivity"),
}


class Scenario(BaseModel):
    """Squeezing, OAM quantum number and angular displacement of one measurement."""

    model_config = ConfigDict(frozen=True)

    r: float = Field(
        ge=0.0, le=MAX_SQUEEZING, allow_inf_nan=False, description="Two-mode squeezing factor"
    )
    ell: int = Field(default=1, ge=1, description="OAM quantum number")
    phi: float = Field(default=0.0, allow_inf_nan=False, description="Angular displacement (rad)")

    @classmethod
    def from_photon_number(cls, nbar: float, ell: int = 1, phi: float = 0.0) -> "Scenario":
        """Build a scenario from the input mean photon number N = 2 sinh^2 r."""
        nbar = ensure_non_negative("nbar", nbar)
        return cls(r=math.asinh(math.sqrt(nbar / 2.0)), ell=ell, phi=phi)

    @property
    def mean_photon_number(self) -> float:
        """N = 2 sinh^2 r, summed over both input modes."""
        return 2.0 * math.sinh(self.r) ** 2

    @property
    def theta(self) -> float:
        """Relative phase 2 ell phi imprinted between the arms."""
        return 2.0 * self.ell * self.phi

    def with_phi(self, phi: float) -> "Scenario":
        return Scenario(r=self.r, ell=self.ell, phi=ensure_finite("phi", phi))


class NoiseConfig(BaseModel):
    """Noise parameters; the defaults describe a noiseless setup."""

    model_config = ConfigDict(frozen=True)

    loss: float = Field(default=0.0, ge=0.0, le=1.0, allow_inf_nan=False)
    dark_rate: float = Field(default=0.0, ge=0.0, allow_inf_nan=False)
    n_thermal: float = Field(default=0.0, ge=0.0, allow_inf_nan=False)
    transmissivity: float = Field(default=1.0, ge=0.0, le=1.0, allow_inf_nan=False)
