"""Tests for interferometer elements, pipelines and closed-form signals."""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from oamparity.errors import DimensionMismatchError, ParameterError
from oamparity.gaussian import marginal, parity_expectation
from oamparity.interferometer import (
    DETECTED_MODE,
    MAX_SQUEEZING,
    NoiseConfig,
    Scenario,
    Variant,
    angular_displacement_transform,
    bs_transform,
    h1,
    h1_coupled,
    ideal_pipeline,
    loss_pipeline,
    r1,
    signal_dark,
    signal_for,
    signal_ideal,
    signal_loss,
    signal_thermal,
    signal_thermal_coupled,
    thermal_pipeline,
    virtual_bs_transform,
    visibility,
    visibility_from_values,
)


def expected_covariance(r: float, ell: int, phi: float) -> np.ndarray:
    """Output covariance of the lossless interferometer, element by element."""
    c, s = math.cosh(2 * r), math.sinh(2 * r)
    theta = 2 * ell * phi
    diag_x = c - math.sin(theta) ** 2 * s
    diag_p = c + math.sin(theta) ** 2 * s
    off = 0.5 * math.sin(2 * theta) * s
    cross = math.cos(theta) ** 2 * s
    return np.array(
        [
            [diag_x, off, cross, off],
            [off, diag_p, off, -cross],
            [cross, off, diag_x, off],
            [off, -cross, off, diag_p],
        ]
    )


PHIS = [0.0, 0.1, 0.3, math.pi / 8, math.pi / 4, 1.0, 2.5]


class TestModels:
    """Tests for scenario and noise parameter models."""

    def test_scenario_from_photon_number(self):
        """Test that N = 2 sinh^2 r round-trips through the constructor."""
        scenario = Scenario.from_photon_number(2.0, ell=3, phi=0.2)
        assert scenario.r == pytest.approx(math.asinh(1.0))
        assert scenario.mean_photon_number == pytest.approx(2.0)
        assert scenario.theta == pytest.approx(1.2)

    def test_scenario_rejects_bad_values(self):
        """Test range checks on r and ell."""
        with pytest.raises(ValidationError):
            Scenario(r=-0.1)
        with pytest.raises(ValidationError):
            Scenario(r=1.0, ell=0)
        with pytest.raises(ValidationError):
            Scenario(r=float("nan"))

    @pytest.mark.parametrize("r", [MAX_SQUEEZING + 1.0, 400.0])
    def test_scenario_rejects_overflowing_squeezing(self, r):
        """Test that r beyond the double-precision range is a validation error."""
        with pytest.raises(ValidationError):
            Scenario(r=r)

    def test_largest_squeezing_stays_finite(self):
        """Test that N and the ideal signal are finite at the upper bound."""
        scenario = Scenario(r=MAX_SQUEEZING, phi=0.1)
        assert math.isfinite(scenario.mean_photon_number)
        assert 0.0 <= signal_ideal(scenario) <= 1.0

    def test_huge_photon_number_rejected(self):
        """Test that N beyond the squeezing bound is a validation error."""
        with pytest.raises(ValidationError):
            Scenario.from_photon_number(1e300)

    def test_scenario_is_frozen(self):
        """Test that scenarios are immutable and with_phi returns a copy."""
        scenario = Scenario(r=1.0)
        with pytest.raises(ValidationError):
            scenario.r = 2.0
        moved = scenario.with_phi(0.4)
        assert moved.phi == 0.4
        assert scenario.phi == 0.0

    def test_noise_ranges(self):
        """Test range checks on noise parameters."""
        with pytest.raises(ValidationError):
            NoiseConfig(loss=1.5)
        with pytest.raises(ValidationError):
            NoiseConfig(dark_rate=-1.0)
        with pytest.raises(ValidationError):
            NoiseConfig(transmissivity=-0.1)

    def test_variant_noise_fields(self):
        """Test which noise fields each variant reads."""
        assert Variant.IDEAL.noise_fields == ()
        assert Variant("thermal").noise_fields == ("n_thermal", "transmissivity")


class TestElements:
    """Tests for the optical element matrices."""

    def test_bs_is_involution(self):
        """Test that the balanced beam splitter squares to the identity."""
        for modes in (2, 4):
            bs = bs_transform(total_modes=modes)
            np.testing.assert_allclose((bs @ bs).matrix, np.eye(2 * modes), atol=1e-15)
            assert bs.is_symplectic()

    def test_rotation_acts_on_mode_a(self):
        """Test that the rotation by 2 ell phi touches only mode A."""
        transform = angular_displacement_transform(2, 0.3, total_modes=4)
        theta = 1.2
        np.testing.assert_allclose(
            transform.matrix[:2, :2],
            [[math.cos(theta), -math.sin(theta)], [math.sin(theta), math.cos(theta)]],
        )
        np.testing.assert_array_equal(transform.matrix[2:, 2:], np.eye(6))
        assert transform.is_symplectic()

    def test_virtual_bs(self):
        """Test the environment coupling matrix."""
        transform = virtual_bs_transform(0.9)
        assert transform.modes == 4
        assert transform.is_symplectic()
        np.testing.assert_allclose(transform.matrix[:4, :4], math.sqrt(0.9) * np.eye(4))
        np.testing.assert_allclose(transform.matrix[:4, 4:], math.sqrt(0.1) * np.eye(4))

    def test_element_errors(self):
        """Test invalid element parameters."""
        with pytest.raises(DimensionMismatchError):
            bs_transform(total_modes=3)
        with pytest.raises(ParameterError):
            angular_displacement_transform(0, 0.1)
        with pytest.raises(ParameterError):
            angular_displacement_transform(1, float("inf"))
        with pytest.raises(ParameterError):
            virtual_bs_transform(1.2)


class TestPipelines:
    """Tests for the matrix routes against closed forms."""

    @pytest.mark.parametrize("phi", [0.0, 0.3, math.pi / 4, math.pi / 8])
    def test_ideal_covariance_elements(self, phi):
        """Test every output covariance element of the lossless interferometer."""
        state = ideal_pipeline(Scenario(r=1.0, ell=1, phi=phi))
        np.testing.assert_allclose(state.covariance, expected_covariance(1.0, 1, phi), atol=1e-12)
        np.testing.assert_allclose(state.mean, np.zeros(4), atol=1e-15)

    def test_cross_element_at_eighth_turn(self):
        """Test the x_A x_B correlation at phi = pi/8."""
        state = ideal_pipeline(Scenario(r=1.0, ell=1, phi=math.pi / 8))
        assert state.covariance[0, 2] == pytest.approx(1.813430, abs=1e-6)

    @pytest.mark.parametrize("ell", [1, 2, 5])
    @pytest.mark.parametrize("phi", PHIS)
    def test_ideal_signal(self, ell, phi):
        """Test the closed-form ideal signal against propagated parity."""
        scenario = Scenario(r=0.9, ell=ell, phi=phi)
        state = ideal_pipeline(scenario)
        assert parity_expectation(state, DETECTED_MODE) == pytest.approx(signal_ideal(scenario), rel=1e-12)
        block = state.covariance[2:, 2:]
        assert np.linalg.det(block) == pytest.approx(r1(scenario), rel=1e-12)

    @pytest.mark.parametrize("loss", [0.0, 0.01, 0.05, 0.3, 1.0])
    @pytest.mark.parametrize("phi", PHIS)
    def test_loss_signal(self, loss, phi):
        """Test the loss closed form against the pipeline with loss applied."""
        scenario = Scenario(r=1.0, ell=2, phi=phi)
        measured = parity_expectation(loss_pipeline(scenario, loss), DETECTED_MODE)
        assert measured == pytest.approx(signal_loss(scenario, loss), rel=1e-12)

    @pytest.mark.parametrize(("n_thermal", "transmissivity"), [(0.1, 0.99), (0.1, 0.97), (0.5, 0.9), (0.0, 1.0)])
    @pytest.mark.parametrize("phi", PHIS)
    def test_thermal_signal_coupled(self, n_thermal, transmissivity, phi):
        """Test the environment-coupled form against the eight-mode pipeline."""
        scenario = Scenario(r=1.0, ell=1, phi=phi)
        state = thermal_pipeline(scenario, n_thermal, transmissivity)
        assert state.modes == 4
        measured = parity_expectation(marginal(state, [DETECTED_MODE]), 0)
        expected = signal_thermal_coupled(scenario, n_thermal, transmissivity)
        assert measured == pytest.approx(expected, rel=1e-11)

    def test_reference_thermal_offset(self):
        """Test the fixed offset between the reference and coupled normalizations."""
        scenario = Scenario(r=1.0, ell=1, phi=0.2)
        n_th, t = 0.3, 0.95
        offset = 2.0 * (2.0 * n_th + 1.0) * (1.0 - t) ** 2 * (scenario.mean_photon_number + 1.0)
        assert h1(scenario, n_th, t) - h1_coupled(scenario, n_th, t) == pytest.approx(offset)


class TestSignals:
    """Tests for reductions, periodicity and noise behaviour of the closed forms."""

    @pytest.mark.parametrize("phi", PHIS)
    def test_reductions_to_ideal(self, phi):
        """Test that zero noise reproduces the ideal signal."""
        scenario = Scenario(r=1.2, ell=3, phi=phi)
        ideal = signal_ideal(scenario)
        assert signal_loss(scenario, 0.0) == pytest.approx(ideal, rel=1e-12)
        assert signal_dark(scenario, 0.0) == pytest.approx(ideal, rel=1e-12)
        assert signal_thermal(scenario, 0.7, 1.0) == pytest.approx(ideal, rel=1e-12)

    def test_total_loss_gives_vacuum_parity(self):
        """Test that L = 1 leaves the vacuum with parity 1."""
        assert signal_loss(Scenario(r=1.0, phi=0.4), 1.0) == pytest.approx(1.0)

    @pytest.mark.parametrize(
        ("variant", "noise"),
        [
            (Variant.IDEAL, NoiseConfig()),
            (Variant.LOSS, NoiseConfig(loss=0.02)),
            (Variant.DARK, NoiseConfig(dark_rate=0.1)),
            (Variant.THERMAL, NoiseConfig(n_thermal=0.2, transmissivity=0.95)),
        ],
    )
    @pytest.mark.parametrize("ell", [1, 2, 7])
    def test_periodicity(self, variant, noise, ell):
        """Test the period pi/(2 ell) in phi over three periods."""
        period = math.pi / (2 * ell)
        for phi in np.linspace(0.0, period, 9):
            base = Scenario(r=1.0, ell=ell, phi=float(phi))
            expected = signal_for(variant, base, noise)
            for k in (1, 2, 3):
                shifted = base.with_phi(float(phi) + k * period)
                assert signal_for(variant, shifted, noise) == pytest.approx(expected, rel=1e-12)

    @pytest.mark.parametrize("ell", [1, 3])
    def test_coupled_thermal_periodicity(self, ell):
        """Test the period of the eight-mode thermal signal."""
        period = math.pi / (2 * ell)
        base = Scenario(r=1.0, ell=ell, phi=0.123)
        expected = signal_thermal_coupled(base, 0.2, 0.95)
        for k in (1, 2, 3):
            shifted = base.with_phi(0.123 + k * period)
            assert signal_thermal_coupled(shifted, 0.2, 0.95) == pytest.approx(expected, rel=1e-12)

    def test_ideal_extremes(self):
        """Test the fringe maximum 1 and minimum 1/cosh 2r."""
        assert signal_ideal(Scenario(r=1.0, phi=math.pi / 4)) == pytest.approx(1.0)
        assert signal_ideal(Scenario(r=1.0, phi=0.0)) == pytest.approx(1.0 / math.cosh(2.0))

    @pytest.mark.parametrize("phi", PHIS)
    def test_dark_ratio(self, phi):
        """Test the constant dark-count damping exp(-2d)."""
        scenario = Scenario(r=1.0, phi=phi)
        assert signal_dark(scenario, 0.1) / signal_ideal(scenario) == pytest.approx(0.818731, abs=1e-6)

    def test_thermal_ordering(self):
        """Test that more coupling to the environment lowers the fringe peak."""
        scenario = Scenario(r=1.0, phi=math.pi / 4)
        weak = signal_thermal(scenario, 0.1, 0.99)
        strong = signal_thermal(scenario, 0.1, 0.97)
        assert strong < weak < signal_ideal(scenario)

    def test_loss_lowers_fringe_peak(self):
        """Test that the peak value drops monotonically for L up to 1/2."""
        scenario = Scenario(r=1.0, phi=math.pi / 4)
        values = [signal_loss(scenario, loss) for loss in (0.0, 0.01, 0.03, 0.1, 0.3)]
        assert all(a > b for a, b in zip(values, values[1:], strict=False))

    def test_signal_for_dispatch(self):
        """Test variant dispatch through signal_for."""
        scenario = Scenario(r=0.8, phi=0.2)
        noise = NoiseConfig(loss=0.05, dark_rate=0.02, n_thermal=0.1, transmissivity=0.98)
        assert signal_for(Variant.IDEAL, scenario) == signal_ideal(scenario)
        assert signal_for(Variant.LOSS, scenario, noise) == signal_loss(scenario, 0.05)
        assert signal_for("dark", scenario, noise) == signal_dark(scenario, 0.02)
        assert signal_for(Variant.THERMAL, scenario, noise) == signal_thermal(scenario, 0.1, 0.98)


class TestVisibility:
    """Tests for fringe visibility."""

    def test_visibility_closed_form(self):
        """Test N/(N+2) at N = 2 and at r = 1."""
        assert visibility(Scenario.from_photon_number(2.0)) == pytest.approx(0.5)
        assert visibility(Scenario(r=1.0)) == pytest.approx(0.580026, abs=1e-6)

    def test_visibility_from_samples(self):
        """Test that sampled fringes reproduce the closed form."""
        scenario = Scenario(r=1.0)
        phis = np.linspace(0.0, math.pi / 2, 201)
        sampled = visibility_from_values(signal_ideal(scenario.with_phi(phi)) for phi in phis)
        assert sampled == pytest.approx(visibility(scenario), rel=1e-9)

    def test_visibility_from_values_errors(self):
        """Test empty and zero-sum samples."""
        with pytest.raises(ParameterError):
            visibility_from_values([])
        with pytest.raises(ParameterError):
            visibility_from_values([0.0, 0.0])
