"""Tests for the truncated Fock-space oracle."""

import math

import numpy as np
import pytest

from oamparity.config.settings import get_settings
from oamparity.errors import DimensionMismatchError, InvalidModeError, ParameterError
from oamparity.interferometer import Scenario, signal_ideal
from oamparity.oracle import (
    MODE_A,
    MODE_B,
    TwoModeFockState,
    apply_bs_fock,
    apply_phase_fock,
    default_cutoff,
    mean_photon_number,
    parity_fock,
    run_ideal_oracle,
    tmsv_fock,
)


def basis_state(n_a: int, n_b: int, cutoff: int = 4) -> TwoModeFockState:
    amplitudes = np.zeros((cutoff, cutoff), dtype=complex)
    amplitudes[n_a, n_b] = 1.0
    return TwoModeFockState(amplitudes)


class TestFockState:
    """Tests for truncated states and single operations."""

    def test_validation(self):
        """Test shape and leakage checks."""
        with pytest.raises(DimensionMismatchError):
            TwoModeFockState(np.zeros((2, 3)))
        with pytest.raises(ParameterError):
            TwoModeFockState(np.eye(2), leakage=-1e-3)

    def test_vacuum_squeezing(self):
        """Test that r = 0 gives the vacuum with no leakage."""
        state = tmsv_fock(0.0, 5)
        assert state.probabilities[0, 0] == pytest.approx(1.0)
        assert state.norm == pytest.approx(1.0)
        assert state.leakage == 0.0

    def test_tmsv_norm_and_leakage(self):
        """Test that kept weight and leakage add up to one."""
        state = tmsv_fock(0.2, 10)
        t = math.tanh(0.2) ** 2
        assert state.leakage == pytest.approx(t**10)
        assert state.norm + state.leakage == pytest.approx(1.0, abs=1e-14)

    def test_tmsv_photon_number(self):
        """Test the total photon number 2 sinh^2 r."""
        state = tmsv_fock(0.5, 80)
        assert mean_photon_number(state) == pytest.approx(2.0 * math.sinh(0.5) ** 2, rel=1e-12)

    def test_tmsv_cutoff_checked(self):
        """Test that an empty truncation is rejected."""
        with pytest.raises(ParameterError):
            tmsv_fock(0.3, 0)

    def test_single_photon_splits_evenly(self):
        """Test |1, 0> on the balanced beam splitter."""
        out = apply_bs_fock(basis_state(1, 0))
        assert out.probabilities[1, 0] == pytest.approx(0.5)
        assert out.probabilities[0, 1] == pytest.approx(0.5)

    def test_two_photon_bunching(self):
        """Test that |1, 1> leaves in |2, 0> and |0, 2> only."""
        out = apply_bs_fock(basis_state(1, 1))
        assert out.probabilities[1, 1] == pytest.approx(0.0, abs=1e-14)
        assert out.probabilities[2, 0] == pytest.approx(0.5)
        assert out.probabilities[0, 2] == pytest.approx(0.5)

    def test_beam_splitter_is_involution(self):
        """Test that two beam splitters restore the input."""
        rng = np.random.default_rng(7)
        amplitudes = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
        amplitudes[np.add.outer(np.arange(6), np.arange(6)) >= 6] = 0.0
        state = TwoModeFockState(amplitudes / np.linalg.norm(amplitudes))
        twice = apply_bs_fock(apply_bs_fock(state, "first"), "second")
        np.testing.assert_allclose(twice.amplitudes, state.amplitudes, atol=1e-12)
        assert twice.leakage == 0.0

    def test_beam_splitter_drops_high_blocks(self):
        """Test that blocks beyond the truncation count as leakage."""
        out = apply_bs_fock(basis_state(3, 3))
        assert out.norm == pytest.approx(0.0)
        assert out.leakage == pytest.approx(1.0)

    def test_beam_splitter_which_checked(self):
        """Test the splitter selector."""
        with pytest.raises(ParameterError):
            apply_bs_fock(basis_state(0, 0), "third")  # type: ignore[arg-type]

    def test_phase_on_mode_a(self):
        """Test that the phase multiplies by exp(i n_A theta)."""
        out = apply_phase_fock(basis_state(2, 1), 0.4)
        assert out.amplitudes[2, 1] == pytest.approx(np.exp(0.8j))
        untouched = apply_phase_fock(basis_state(0, 3), 0.4)
        assert untouched.amplitudes[0, 3] == pytest.approx(1.0)

    def test_parity(self):
        """Test parity of |0, 1> on each mode."""
        state = basis_state(0, 1)
        assert parity_fock(state, MODE_B) == pytest.approx(-1.0)
        assert parity_fock(state, MODE_A) == pytest.approx(1.0)
        with pytest.raises(InvalidModeError):
            parity_fock(state, 2)


class TestCutoff:
    """Tests for the automatic truncation."""

    def test_vacuum_cutoff(self):
        """Test the smallest truncation for r = 0."""
        assert default_cutoff(0.0) == 2

    def test_cutoff_matches_leakage_target(self):
        """Test 2 M with M the first power of tanh^2 r below the target."""
        t = math.tanh(1.0) ** 2
        terms = 1
        while t**terms > 1e-12:
            terms += 1
        assert default_cutoff(1.0) == 2 * terms
        assert t ** (terms - 1) > 1e-12

    def test_cutoff_cap(self):
        """Test that max_terms bounds the truncation."""
        assert default_cutoff(3.0, max_terms=10) == 20

    def test_saturated_squeezing_uses_cap(self):
        """Test that tanh^2 r == 1 in double precision falls back to the cap."""
        assert math.tanh(20.0) ** 2 == 1.0
        assert default_cutoff(20.0, max_terms=10) == 20
        assert default_cutoff(20.0) == 2 * 128

    def test_looser_target_shrinks_cutoff(self):
        """Test the leakage target override."""
        assert default_cutoff(1.0, leakage_target=1e-4) < default_cutoff(1.0)


class TestOracle:
    """Tests for the full oracle against the closed form."""

    def test_saturated_squeezing_reports_leakage(self, monkeypatch):
        """Test that an unresolvable state returns with its leakage instead of failing."""
        monkeypatch.setenv("OAMPARITY_ORACLE_MAX_TERMS", "4")
        get_settings.cache_clear()
        result = run_ideal_oracle(Scenario(r=20.0, phi=0.1))
        assert result.cutoff == 8
        assert result.leakage == pytest.approx(1.0)

    def test_reference_value(self):
        """Test r = 0.2, phi = 0.3 with a 40-level truncation."""
        result = run_ideal_oracle(Scenario(r=0.2, ell=1, phi=0.3), cutoff=40)
        assert result.parity == pytest.approx(0.947058, abs=1e-6)
        assert result.cutoff == 40
        assert result.leakage < 1e-20

    @pytest.mark.parametrize("ell", [1, 3])
    @pytest.mark.parametrize("phi", np.linspace(0.0, math.pi / 2, 7).tolist())
    def test_matches_closed_form(self, ell, phi):
        """Test agreement with the Gaussian signal at the default truncation."""
        scenario = Scenario(r=0.5, ell=ell, phi=phi)
        result = run_ideal_oracle(scenario)
        assert result.leakage < 1e-11
        assert result.parity == pytest.approx(signal_ideal(scenario), abs=1e-9)

    def test_strong_squeezing(self):
        """Test r = 1 at the working point and at a dark fringe."""
        for phi in (0.0, 0.3, math.pi / 4):
            scenario = Scenario(r=1.0, phi=phi)
            assert run_ideal_oracle(scenario).parity == pytest.approx(signal_ideal(scenario), abs=1e-8)
