"""Phase-space matrices of the beam splitters, Dove-prism rotation and virtual beam splitter.

Mode order is (A, B) for the signal arms, followed by the environment modes
(E_A, E_B) in the eight-dimensional thermal construction.
"""

import numpy as np
from scipy.linalg import block_diag

from oamparity.errors import DimensionMismatchError, ParameterError, ensure_finite, ensure_fraction
from oamparity.gaussian import SymplecticTransform

SUPPORTED_MODES = (2, 4)


def _check_modes(total_modes: int) -> int:
    if total_modes not in SUPPORTED_MODES:
        raise DimensionMismatchError(
            f"total_modes must be one of {SUPPORTED_MODES}, got {total_modes}"
        )
    return total_modes


def _embed(block: np.ndarray, total_modes: int) -> SymplecticTransform:
    """Act with ``block`` on the signal modes and identity on the environment."""
    if total_modes == 2:
        return SymplecticTransform(block)
    return SymplecticTransform(block_diag(block, np.eye(4)))


def _rotation_block(theta: float) -> np.ndarray:
    return np.array([[np.cos(theta), -np.sin(theta)], [np.sin(theta), np.cos(theta)]])


def bs_transform(total_modes: int = 2) -> SymplecticTransform:
    """
    Balanced beam splitter (1/sqrt 2)[[I, I], [I, -I]] on modes A and B.

    With ``total_modes=4`` the environment modes pass through untouched.
    The matrix is its own inverse.
    """
    _check_modes(total_modes)
    identity = np.eye(2)
    block = np.block([[identity, identity], [identity, -identity]]) / np.sqrt(2.0)
    return _embed(block, total_modes)


def angular_displacement_transform(
    ell: int, phi: float, total_modes: int = 2
) -> SymplecticTransform:
    """Rotate mode A's quadratures by 2 ell phi; identity on every other mode."""
    _check_modes(total_modes)
    if ell < 1:
        raise ParameterError(f"ell must be >= 1, got {ell}")
    phi = ensure_finite("phi", phi)

    block = np.eye(4)
    block[:2, :2] = _rotation_block(2.0 * ell * phi)
    return _embed(block, total_modes)


def virtual_bs_transform(transmissivity: float) -> SymplecticTransform:
    """
    Virtual beam splitters coupling each arm to its own environment mode.

    Returns the 8x8 matrix [[sqrt(T) I4, sqrt(1-T) I4], [sqrt(1-T) I4, -sqrt(T) I4]].
    """
    t = ensure_fraction("transmissivity", transmissivity)
    identity = np.eye(4)
    root_t, root_r = np.sqrt(t), np.sqrt(1.0 - t)
    return SymplecticTransform(
        np.block([[root_t * identity, root_r * identity], [root_r * identity, -root_t * identity]])
    )
