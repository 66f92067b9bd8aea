"""Gaussian states, symplectic transforms and the operations acting on them."""

from oamparity.gaussian.operations import (
    apply_uniform_loss,
    evaluate_wigner,
    marginal,
    parity_expectation,
    propagate,
)
from oamparity.gaussian.state import (
    GaussianState,
    SymplecticTransform,
    chain,
    direct_sum,
    identity_transform,
    symplectic_form,
    thermal_state,
    two_mode_squeezed_vacuum,
    vacuum,
)

__all__ = [
    # States and transforms
    "GaussianState",
    "SymplecticTransform",
    "chain",
    "direct_sum",
    "identity_transform",
    "symplectic_form",
    "thermal_state",
    "two_mode_squeezed_vacuum",
    "vacuum",
    # Operations
    "apply_uniform_loss",
    "evaluate_wigner",
    "marginal",
    "parity_expectation",
    "propagate",
]
