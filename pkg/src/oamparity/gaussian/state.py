"""Gaussian states and symplectic transforms in the (x1, p1, x2, p2, ...) ordering.

Quadratures are dimensionless with vacuum variance 1, so the vacuum covariance is
the identity and no factors of hbar appear anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np

from oamparity.errors import (
    DimensionMismatchError,
    NonPhysicalStateError,
    ensure_finite,
    ensure_non_negative,
)

SYMMETRY_TOL = 1e-12


def _frozen_array(value: Any, name: str) -> np.ndarray:
    array = np.array(value, dtype=float)
    if not np.all(np.isfinite(array)):
        raise NonPhysicalStateError(f"{name} contains non-finite entries")
    array.setflags(write=False)
    return array


def symplectic_form(modes: int) -> np.ndarray:
    """Block-diagonal symplectic form Omega for ``modes`` modes."""
    return np.kron(np.eye(modes), np.array([[0.0, 1.0], [-1.0, 0.0]]))


@dataclass(frozen=True, eq=False)
class GaussianState:
    """
    A Gaussian state given by its first and second moments.

    Attributes:
        mean: Phase-space expectation values, length 2k.
        covariance: Symmetric positive-definite 2k x 2k covariance matrix.
    """

    mean: np.ndarray
    covariance: np.ndarray

    def __post_init__(self) -> None:
        mean = _frozen_array(self.mean, "mean")
        covariance = _frozen_array(self.covariance, "covariance")

        if mean.ndim != 1 or mean.size == 0 or mean.size % 2:
            raise DimensionMismatchError(
                f"mean must be a non-empty vector of even length, got shape {mean.shape}"
            )
        if covariance.shape != (mean.size, mean.size):
            raise DimensionMismatchError(
                f"covariance shape {covariance.shape} does not match mean length {mean.size}"
            )
        asymmetry = float(np.max(np.abs(covariance - covariance.T)))
        if asymmetry > SYMMETRY_TOL:
            raise NonPhysicalStateError(f"covariance is not symmetric (max |G - G^T| = {asymmetry:.3e})")
        smallest = float(np.linalg.eigvalsh(covariance)[0])
        if smallest <= 0.0:
            raise NonPhysicalStateError(
                f"covariance is not positive definite (smallest eigenvalue {smallest:.3e})"
            )

        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "covariance", covariance)

    @property
    def modes(self) -> int:
        """Number of bosonic modes k."""
        return self.mean.size // 2

    def __repr__(self) -> str:
        return f"GaussianState(modes={self.modes})"


@dataclass(frozen=True, eq=False)
class SymplecticTransform:
    """
    A linear phase-space map X -> S X.

    Compose with ``@`` in matrix order: ``second @ first`` applies ``first`` then
    ``second``. :func:`chain` takes transforms in the order light meets them.
    """

    matrix: np.ndarray

    def __post_init__(self) -> None:
        matrix = np.array(self.matrix, dtype=float)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] % 2:
            raise DimensionMismatchError(
                f"transform must be an even-sized square matrix, got shape {matrix.shape}"
            )
        if not np.all(np.isfinite(matrix)):
            raise NonPhysicalStateError("transform contains non-finite entries")
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    @property
    def modes(self) -> int:
        return self.matrix.shape[0] // 2

    @property
    def determinant(self) -> float:
        return float(np.linalg.det(self.matrix))

    def is_symplectic(self, atol: float = 1e-12) -> bool:
        """Check S Omega S^T == Omega."""
        omega = symplectic_form(self.modes)
        return bool(np.allclose(self.matrix @ omega @ self.matrix.T, omega, rtol=0.0, atol=atol))

    def __matmul__(self, other: SymplecticTransform) -> SymplecticTransform:
        if not isinstance(other, SymplecticTransform):
            return NotImplemented
        if other.modes != self.modes:
            raise DimensionMismatchError(
                f"cannot compose a {self.modes}-mode transform with a {other.modes}-mode transform"
            )
        return SymplecticTransform(self.matrix @ other.matrix)

    def __repr__(self) -> str:
        return f"SymplecticTransform(modes={self.modes})"


def identity_transform(modes: int) -> SymplecticTransform:
    return SymplecticTransform(np.eye(2 * modes))


def chain(*transforms: SymplecticTransform) -> SymplecticTransform:
    """Compose transforms given in propagation order: returns S_last ... S_first."""
    if not transforms:
        raise ValueError("chain() needs at least one transform")
    total = transforms[0]
    for transform in transforms[1:]:
        total = transform @ total
    return total


def vacuum(modes: int = 1) -> GaussianState:
    """Vacuum on ``modes`` modes: zero mean, identity covariance."""
    if modes < 1:
        raise DimensionMismatchError(f"modes must be >= 1, got {modes}")
    return GaussianState(np.zeros(2 * modes), np.eye(2 * modes))


def thermal_state(n_thermal: float, modes: int = 1) -> GaussianState:
    """Thermal state with mean occupation ``n_thermal`` per mode: (2 n + 1) I."""
    n_thermal = ensure_non_negative("n_thermal", n_thermal)
    return GaussianState(np.zeros(2 * modes), (2.0 * n_thermal + 1.0) * np.eye(2 * modes))


def two_mode_squeezed_vacuum(r: float) -> GaussianState:
    """
    Two-mode squeezed vacuum with squeezing factor ``r``.

    Covariance [[cosh 2r I, sinh 2r Z], [sinh 2r Z, cosh 2r I]] with Z = diag(1, -1).
    """
    r = ensure_finite("r", r)
    c, s = np.cosh(2.0 * r), np.sinh(2.0 * r)
    z = np.diag([1.0, -1.0])
    covariance = np.block([[c * np.eye(2), s * z], [s * z, c * np.eye(2)]])
    return GaussianState(np.zeros(4), covariance)


def direct_sum(*states: GaussianState) -> GaussianState:
    """Product state: concatenated means and block-diagonal covariance."""
    if not states:
        raise ValueError("direct_sum() needs at least one state")
    mean = np.concatenate([state.mean for state in states])
    size = mean.size
    covariance = np.zeros((size, size))
    offset = 0
    for state in states:
        width = state.mean.size
        covariance[offset : offset + width, offset : offset + width] = state.covariance
        offset += width
    return GaussianState(mean, covariance)
