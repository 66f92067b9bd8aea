"""Brute-force ideal interferometer in a truncated two-mode Fock basis.

States are pure and stored as amplitude matrices c[n_A, n_B]. The beam splitter
conserves total photon number, so it is applied block by block on the
anti-diagonals n_A + n_B = K. Blocks that do not fit in the truncated space are
dropped and their weight is added to the reported leakage.
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy.linalg import expm

from oamparity.config.settings import get_settings
from oamparity.errors import DimensionMismatchError, InvalidModeError, ParameterError, ensure_finite
from oamparity.interferometer import Scenario
from oamparity.observability import get_logger

_logger = get_logger(__name__)

MODE_A = 0
MODE_B = 1


@dataclass(frozen=True, eq=False)
class TwoModeFockState:
    """
    Pure two-mode state truncated to ``cutoff`` levels per mode.

    Attributes:
        amplitudes: Complex matrix indexed by (n_A, n_B).
        leakage: Probability known to be missing from the truncated space.
    """

    amplitudes: np.ndarray
    leakage: float = 0.0

    def __post_init__(self) -> None:
        amplitudes = np.array(self.amplitudes, dtype=complex)
        if amplitudes.ndim != 2 or amplitudes.shape[0] != amplitudes.shape[1] or amplitudes.size == 0:
            raise DimensionMismatchError(
                f"amplitudes must be a non-empty square matrix, got shape {amplitudes.shape}"
            )
        if self.leakage < 0.0:
            raise ParameterError(f"leakage must be non-negative, got {self.leakage}")
        amplitudes.setflags(write=False)
        object.__setattr__(self, "amplitudes", amplitudes)
        object.__setattr__(self, "leakage", float(self.leakage))

    @property
    def cutoff(self) -> int:
        return self.amplitudes.shape[0]

    @property
    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    @property
    def norm(self) -> float:
        """Sum of |c|^2 over the truncated space."""
        return float(self.probabilities.sum())

    def __repr__(self) -> str:
        return f"TwoModeFockState(cutoff={self.cutoff}, leakage={self.leakage:.3e})"


class OracleResult(BaseModel):
    """Parity from the Fock simulation together with its truncation bound."""

    model_config = ConfigDict(frozen=True)

    parity: float
    leakage: float = Field(ge=0.0)
    cutoff: int = Field(ge=1)


def _thermal_ratio(r: float) -> float:
    """t = tanh^2 r = N / (N + 2)."""
    return math.tanh(r) ** 2


def tmsv_fock(r: float, cutoff: int) -> TwoModeFockState:
    """Two-mode squeezed vacuum sum_m sqrt((1 - t) t^m) |m, m> for m < cutoff."""
    r = ensure_finite("r", r)
    if cutoff < 1:
        raise ParameterError(f"cutoff must be >= 1, got {cutoff}")

    t = _thermal_ratio(r)
    m = np.arange(cutoff)
    amplitudes = np.diag(np.sqrt((1.0 - t) * t**m)).astype(complex)
    return TwoModeFockState(amplitudes, leakage=t**cutoff)


@lru_cache(maxsize=None)
def _bs_block(total: int) -> np.ndarray:
    """
    Balanced beam splitter on the block spanned by |n, total - n>, n = 0..total.

    exp(pi/4 (a^dag b - a b^dag)) followed by the parity (-1)^(n_B), giving
    a -> (a + b)/sqrt 2 and b -> (a - b)/sqrt 2. The result squares to identity.
    """
    n = np.arange(total)
    coupling = np.sqrt((n + 1.0) * (total - n))
    generator = np.diag(coupling, -1) - np.diag(coupling, 1)
    sign = (-1.0) ** (total - np.arange(total + 1))
    unitary = sign[:, None] * expm(0.25 * np.pi * generator)
    unitary.setflags(write=False)
    return unitary


def apply_bs_fock(
    state: TwoModeFockState, which: Literal["first", "second"] = "first"
) -> TwoModeFockState:
    """
    Apply a balanced beam splitter. Both splitters of the interferometer are identical.

    Blocks with total photon number >= cutoff are discarded into ``leakage``.
    """
    if which not in ("first", "second"):
        raise ParameterError(f"which must be 'first' or 'second', got {which!r}")

    size = state.cutoff
    source = state.amplitudes
    out = np.zeros_like(source)
    dropped = 0.0
    for total in range(2 * size - 1):
        n_a = np.arange(max(0, total - size + 1), min(total, size - 1) + 1)
        block = source[n_a, total - n_a]
        if total >= size:
            dropped += float(np.sum(np.abs(block) ** 2))
            continue
        out[n_a, total - n_a] = _bs_block(total) @ block
    return TwoModeFockState(out, leakage=state.leakage + dropped)


def apply_phase_fock(state: TwoModeFockState, theta: float) -> TwoModeFockState:
    """Multiply c[n, m] by exp(i n theta): a phase on mode A."""
    theta = math.remainder(ensure_finite("theta", theta), math.tau)
    phases = np.exp(1j * theta * np.arange(state.cutoff))
    return TwoModeFockState(phases[:, None] * state.amplitudes, leakage=state.leakage)


def parity_fock(state: TwoModeFockState, mode: int = MODE_B) -> float:
    """P_even - P_odd of the photon number in ``mode`` (0 for A, 1 for B)."""
    if mode not in (MODE_A, MODE_B):
        raise InvalidModeError(f"mode must be {MODE_A} (A) or {MODE_B} (B), got {mode!r}")
    signs = (-1.0) ** np.arange(state.cutoff)
    probabilities = state.probabilities
    if mode == MODE_A:
        return float(signs @ probabilities.sum(axis=1))
    return float(signs @ probabilities.sum(axis=0))


def mean_photon_number(state: TwoModeFockState) -> float:
    """Expected total photon number n_A + n_B."""
    levels = np.arange(state.cutoff)
    probabilities = state.probabilities
    return float(levels @ probabilities.sum(axis=1) + levels @ probabilities.sum(axis=0))


def default_cutoff(r: float, leakage_target: float | None = None, max_terms: int | None = None) -> int:
    """
    Truncation giving leakage below ``leakage_target`` after the beam splitters.

    M is the smallest integer with t^M <= target (capped at ``max_terms``); the
    returned per-mode dimension is 2 M so every photon-number block the
    squeezed state populates survives the first beam splitter.
    """
    settings = get_settings().oracle
    target = leakage_target or settings.leakage_target
    cap = max_terms or settings.max_terms

    t = _thermal_ratio(ensure_finite("r", r))
    if t == 0.0:
        terms = 1
    elif t >= 1.0:
        # tanh saturates: no finite truncation meets the target.
        terms = cap
    else:
        terms = max(1, math.ceil(math.log(target) / math.log(t)))
        while terms > 1 and t ** (terms - 1) <= target:
            terms -= 1
        while t**terms > target:
            terms += 1
    return 2 * min(terms, cap)


def run_ideal_oracle(scenario: Scenario, cutoff: int | None = None) -> OracleResult:
    """Squeezed vacuum, BS1, phase 2 ell phi on A, BS2, then parity of mode B."""
    size = cutoff or default_cutoff(scenario.r)
    state = tmsv_fock(scenario.r, size)
    state = apply_bs_fock(state, "first")
    state = apply_phase_fock(state, scenario.theta)
    state = apply_bs_fock(state, "second")

    result = OracleResult(parity=parity_fock(state, MODE_B), leakage=state.leakage, cutoff=size)
    _logger.debug("oracle_evaluated", r=scenario.r, ell=scenario.ell, cutoff=size, leakage=result.leakage)
    return result
