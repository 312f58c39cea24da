"""Tests for the quadrature, ODE and sampling kernels."""

import math

import numpy as np
import pytest

from jja_bath.errors import RegimeError
from jja_bath.numerics import (
    QuadratureResult,
    ode_evolve,
    quad_adaptive,
    quad_fourier,
    quad_pv,
    quad_vector,
    rng_truncated_normal,
    truncated_mass,
    truncated_normal_moments,
)


class TestQuadrature:
    """Tests for the scalar and vector integrators."""

    def test_polynomial_integral(self):
        """Test a finite-interval polynomial integral."""
        res = quad_adaptive(lambda x: x**2, 0.0, 1.0)
        assert res.value == pytest.approx(1.0 / 3.0, rel=1e-12)
        assert res.abs_err_estimate >= 0.0

    def test_semi_infinite_interval(self):
        """Test the exponential mapping of an infinite upper limit."""
        res = quad_adaptive(lambda x: math.exp(-x), 0.0, math.inf)
        assert res.value == pytest.approx(1.0, rel=1e-10)

    def test_complex_integrand(self):
        """Test that complex integrands are integrated part by part."""
        res = quad_adaptive(lambda x: np.exp(1j * x), 0.0, math.pi)
        assert res.value == pytest.approx(2j, abs=1e-10)

    def test_reversed_interval_rejected(self):
        """Test that an empty interval raises ValueError."""
        with pytest.raises(ValueError):
            quad_adaptive(lambda x: x, 1.0, 0.0)

    def test_fourier_weight(self):
        """Test the oscillatory weight against the closed form."""
        t = 2.0
        res = quad_fourier(lambda x: 1.0, 0.0, 1.0, t)
        expected = (1.0 - np.exp(-1j * t)) / (1j * t)
        assert res.value == pytest.approx(expected, abs=1e-10)

    def test_fourier_at_zero_time(self):
        """Test that t = 0 reduces to the plain integral."""
        res = quad_fourier(lambda x: x, 0.0, 2.0, 0.0)
        assert res.value == pytest.approx(2.0, rel=1e-12)

    def test_principal_value_log(self):
        """Test the analytic logarithm of a constant numerator."""
        res = quad_pv(lambda x: 1.0, 0.0, 2.0, 0.5)
        assert res.value == pytest.approx(math.log(3.0), rel=1e-10)

    def test_principal_value_regular_part(self):
        """Test the excised integral and its extrapolation."""
        res = quad_pv(lambda x: x, -1.0, 2.0, 0.0)
        assert res.value == pytest.approx(3.0, rel=1e-8)

    def test_principal_value_pole_outside(self):
        """Test that a pole outside the interval raises ValueError."""
        with pytest.raises(ValueError):
            quad_pv(lambda x: 1.0, 0.0, 1.0, 2.0)

    def test_vector_quadrature(self):
        """Test a vector integrand on a shared mesh."""
        value, err = quad_vector(lambda x: np.array([1.0, x]), 0.0, 2.0)
        np.testing.assert_allclose(value, [2.0, 2.0], rtol=1e-10)
        assert err >= 0.0

    def test_result_arithmetic(self):
        """Test that summed results add their error estimates."""
        a = QuadratureResult(1.0, 1e-3, 4)
        b = QuadratureResult(2.0, 2e-3, 6)
        total = a + b
        assert total.value == 3.0
        assert total.abs_err_estimate == pytest.approx(3e-3)
        assert total.subdivisions == 10
        assert a.scaled(-2.0).abs_err_estimate == pytest.approx(2e-3)

    def test_negative_error_rejected(self):
        """Test the nonnegative error invariant."""
        with pytest.raises(ValueError):
            QuadratureResult(1.0, -1.0, 0)


class TestOde:
    """Tests for ode_evolve."""

    def test_exponential_decay(self):
        """Test dy/dt = -y against exp(-t)."""
        times = np.linspace(0.0, 2.0, 21)
        traj = ode_evolve(lambda t, y: -y, np.array([1.0]), times)
        assert len(traj) == 21
        np.testing.assert_allclose(traj.states[:, 0], np.exp(-times), rtol=1e-7)

    def test_complex_rotation(self):
        """Test a complex state vector integrated directly."""
        times = np.linspace(0.0, 3.0, 7)
        traj = ode_evolve(lambda t, y: 1j * y, np.array([1.0 + 0j]), times)
        np.testing.assert_allclose(traj.states[:, 0], np.exp(1j * times), atol=1e-7)

    def test_single_time_returns_initial_state(self):
        """Test that a one-point grid returns y0 unchanged."""
        traj = ode_evolve(lambda t, y: -y, np.array([3.0]), np.array([0.5]))
        assert traj.states.shape == (1, 1)
        assert traj.states[0, 0] == 3.0

    def test_non_increasing_times(self):
        """Test that an unsorted grid raises ValueError."""
        with pytest.raises(ValueError):
            ode_evolve(lambda t, y: -y, np.array([1.0]), np.array([0.0, 1.0, 0.5]))


class TestSampling:
    """Tests for the truncated normal sampler."""

    def test_same_seed_same_samples(self):
        """Test reproducibility of seeded draws."""
        a = rng_truncated_normal(0.0, 1.0, -0.5, seed=7, count=100)
        b = rng_truncated_normal(0.0, 1.0, -0.5, seed=7, count=100)
        np.testing.assert_array_equal(a, b)

    def test_samples_above_bound(self):
        """Test that every draw respects the truncation."""
        draws = rng_truncated_normal(1.0, 2.0, 0.5, seed=1, count=5000)
        assert draws.shape == (5000,)
        assert np.all(draws > 0.5)

    def test_pathological_truncation(self):
        """Test that a negligible retained mass raises RegimeError."""
        with pytest.raises(RegimeError):
            rng_truncated_normal(0.0, 1.0, 10.0, seed=0, count=10)

    def test_half_normal_moments(self):
        """Test the analytic moments of a half-normal law."""
        mean, var = truncated_normal_moments(0.0, 1.0, 0.0)
        assert mean == pytest.approx(math.sqrt(2.0 / math.pi), rel=1e-12)
        assert var == pytest.approx(1.0 - 2.0 / math.pi, rel=1e-12)
        assert truncated_mass(0.0, 1.0, 0.0) == pytest.approx(0.5)

    def test_sample_moments_match_analytic(self):
        """Test sampled mean and variance against the analytic moments."""
        draws = rng_truncated_normal(0.0, 1.0, -0.3, seed=3, count=200_000)
        mean, var = truncated_normal_moments(0.0, 1.0, -0.3)
        assert draws.mean() == pytest.approx(mean, abs=5 * math.sqrt(var / draws.size))
        assert draws.var() == pytest.approx(var, rel=0.02)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
