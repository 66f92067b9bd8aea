"""Operations on Gaussian states: propagation, Wigner values, marginals, parity, loss."""

from collections.abc import Sequence

import numpy as np
import numpy.typing as npt

from oamparity.errors import (
    DimensionMismatchError,
    InvalidModeError,
    NonPhysicalStateError,
    ensure_fraction,
)
from oamparity.gaussian.state import GaussianState, SymplecticTransform


def _check_mode(state: GaussianState, mode: int) -> int:
    if isinstance(mode, bool) or not isinstance(mode, (int, np.integer)):
        raise InvalidModeError(f"mode index must be an integer, got {mode!r}")
    if not 0 <= mode < state.modes:
        raise InvalidModeError(f"mode {mode} out of range for a {state.modes}-mode state")
    return int(mode)


def _quadrature_indices(modes: Sequence[int]) -> list[int]:
    return [index for mode in modes for index in (2 * mode, 2 * mode + 1)]


def propagate(state: GaussianState, transform: SymplecticTransform) -> GaussianState:
    """
    Send a state through a linear optical element.

    Returns the state with mean S M and covariance S G S^T. The output covariance
    is symmetrized to absorb floating-point asymmetry from the two products.
    """
    if state.modes != transform.modes:
        raise DimensionMismatchError(
            f"state has {state.modes} modes but transform acts on {transform.modes}"
        )
    s = transform.matrix
    covariance = s @ state.covariance @ s.T
    return GaussianState(s @ state.mean, 0.5 * (covariance + covariance.T))


def evaluate_wigner(
    state: GaussianState, point: npt.ArrayLike
) -> float | npt.NDArray[np.float64]:
    """
    Wigner function exp(-(X-M)^T G^-1 (X-M)) / (pi^k sqrt(det G)).

    ``point`` is one phase-space vector of length 2k or a stack of them with the
    quadrature axis last; a stack returns an array of values.
    """
    points = np.asarray(point, dtype=float)
    size = state.mean.size
    if points.shape[-1:] != (size,):
        raise DimensionMismatchError(
            f"point must have trailing length {size}, got shape {points.shape}"
        )
    determinant = float(np.linalg.det(state.covariance))
    if determinant <= 0.0:
        raise NonPhysicalStateError(f"covariance determinant {determinant:.3e} is not positive")

    precision = np.linalg.inv(state.covariance)
    offset = points - state.mean
    exponent = np.einsum("...i,ij,...j->...", offset, precision, offset)
    values = np.exp(-exponent) / (np.pi**state.modes * np.sqrt(determinant))
    if values.ndim == 0:
        return float(values)
    return values


def marginal(state: GaussianState, mode_indices: Sequence[int]) -> GaussianState:
    """Reduced state on ``mode_indices`` (in the given order)."""
    modes = [_check_mode(state, mode) for mode in mode_indices]
    if not modes:
        raise InvalidModeError("at least one mode must be kept")
    if len(set(modes)) != len(modes):
        raise InvalidModeError(f"mode indices must be distinct, got {list(mode_indices)}")

    index = _quadrature_indices(modes)
    return GaussianState(state.mean[index], state.covariance[np.ix_(index, index)])


def parity_expectation(state: GaussianState, mode: int) -> float:
    """
    Photon-number parity <(-1)^n> = P_even - P_odd of one mode.

    Equals pi times the single-mode marginal Wigner function at the origin,
    exp(-m^T g^-1 m) / sqrt(det g) for the mode's 2x2 block g and mean m.
    """
    mode = _check_mode(state, mode)
    i, j = 2 * mode, 2 * mode + 1
    g = state.covariance
    a, b, c, d = g[i, i], g[i, j], g[j, i], g[j, j]
    determinant = a * d - b * c
    if determinant <= 0.0:
        raise NonPhysicalStateError(
            f"mode {mode} covariance block has determinant {determinant:.3e}"
        )

    x, p = state.mean[i], state.mean[j]
    # adjugate inverse of the 2x2 block
    exponent = (d * x * x - (b + c) * x * p + a * p * p) / determinant
    return float(np.exp(-exponent) / np.sqrt(determinant))


def apply_uniform_loss(state: GaussianState, loss: float) -> GaussianState:
    """
    Mix every mode with vacuum on a beam splitter of transmissivity 1 - ``loss``.

    Covariance becomes (1 - L) G + L I and the mean sqrt(1 - L) M.
    """
    loss = ensure_fraction("loss", loss)
    size = state.mean.size
    return GaussianState(
        np.sqrt(1.0 - loss) * state.mean,
        (1.0 - loss) * state.covariance + loss * np.eye(size),
    )
