"""Angular-displacement sensitivity, optima and reference limits."""

from oamparity.sensitivity.estimators import (
    NoiseTerms,
    default_step,
    delta_phi_from_terms,
    noise_terms,
    richardson_derivative,
    sensitivity_closed,
    sensitivity_numeric,
)
from oamparity.sensitivity.models import LimitSet, Optimum, SensitivityPoint
from oamparity.sensitivity.optimum import (
    hl_gap,
    limits,
    optimal_sensitivity,
    repetition_equivalent,
)

__all__ = [
    "LimitSet",
    "NoiseTerms",
    "Optimum",
    "SensitivityPoint",
    "default_step",
    "delta_phi_from_terms",
    "hl_gap",
    "limits",
    "noise_terms",
    "optimal_sensitivity",
    "repetition_equivalent",
    "richardson_derivative",
    "sensitivity_closed",
    "sensitivity_numeric",
]
