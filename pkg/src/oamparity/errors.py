"""Exception hierarchy and shared argument checks."""

import math


class OamParityError(Exception):
    """Base class for every error raised by oamparity."""


class ParameterError(OamParityError, ValueError):
    """A physical parameter is non-finite or outside its allowed range."""


class DimensionMismatchError(OamParityError, ValueError):
    """Phase-space dimensions of a state and a transform disagree."""


class NonPhysicalStateError(OamParityError, ValueError):
    """A covariance matrix is singular, indefinite or otherwise unphysical."""


class InvalidModeError(OamParityError, ValueError):
    """A mode selection is empty, repeated or out of range."""


def ensure_finite(name: str, value: float) -> float:
    """Return ``value`` as float, rejecting NaN and infinities."""
    value = float(value)
    if not math.isfinite(value):
        raise ParameterError(f"{name} must be finite, got {value!r}")
    return value


def ensure_fraction(name: str, value: float) -> float:
    """Return ``value`` if it is a finite number in [0, 1]."""
    value = ensure_finite(name, value)
    if not 0.0 <= value <= 1.0:
        raise ParameterError(f"{name} must lie in [0, 1], got {value}")
    return value


def ensure_non_negative(name: str, value: float) -> float:
    """Return ``value`` if it is a finite number >= 0."""
    value = ensure_finite(name, value)
    if value < 0.0:
        raise ParameterError(f"{name} must be non-negative, got {value}")
    return value
