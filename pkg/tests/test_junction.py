"""Tests for the charge-basis junction and its exact correlators."""

import numpy as np
import pytest

from jja_bath.errors import CutoffError
from jja_bath.junction import (
    CorrelationSeries,
    JunctionParams,
    SeriesSource,
    build_hamiltonian,
    charge_operator,
    cos_phi_operator,
    cutoff_adequate,
    diagonalize,
    exact_correlation,
    imaginary_time_correlation,
    parity_operator,
    thermal_charge_expectation,
)
from jja_bath.perturbation import g_low_t, perturbative_energy

WEAK = JunctionParams(e_c=1.0, e_j=0.05)


class TestJunctionParams:
    """Tests for parameter validation."""

    def test_lambda(self):
        """Test λ = E_J / E_C."""
        assert JunctionParams(e_c=2.0, e_j=0.1).lam == pytest.approx(0.05)

    def test_invalid_energies(self):
        """Test that nonpositive E_C and negative E_J are rejected."""
        with pytest.raises(ValueError):
            JunctionParams(e_c=0.0, e_j=0.1)
        with pytest.raises(ValueError):
            JunctionParams(e_c=1.0, e_j=-0.1)

    def test_dict_round_trip(self):
        """Test to_dict/from_dict."""
        assert JunctionParams.from_dict(WEAK.to_dict()) == WEAK


class TestOperators:
    """Tests for the truncated charge-basis operators."""

    def test_hamiltonian_hermitian(self):
        """Test that H is Hermitian with the expected dimension."""
        h = build_hamiltonian(WEAK, n_max=5)
        assert h.dim == 11
        assert h.is_hermitian()

    def test_hamiltonian_entries(self):
        """Test diagonal n²E_C and hopping −E_J/2."""
        h = build_hamiltonian(JunctionParams(e_c=2.0, e_j=0.4), n_max=2).entries
        np.testing.assert_allclose(np.diag(h).real, [8.0, 2.0, 0.0, 2.0, 8.0])
        np.testing.assert_allclose(np.diag(h, 1).real, -0.2)

    def test_parity_commutes_with_hamiltonian(self):
        """Test [H, 𝒞] = 0."""
        h = build_hamiltonian(WEAK, n_max=4)
        c = parity_operator(4)
        assert np.allclose(h.commutator(c).entries, 0.0)

    def test_charge_and_cos_phi(self):
        """Test N and cos φ on a small cutoff."""
        n = charge_operator(1).entries
        cos_phi = cos_phi_operator(1).entries
        np.testing.assert_allclose(np.diag(n).real, [-1, 0, 1])
        np.testing.assert_allclose(cos_phi[0, 1], 0.5)
        assert cos_phi[0, 2] == 0.0

    def test_cutoff_too_small(self):
        """Test that n_max < 1 raises CutoffError."""
        with pytest.raises(CutoffError):
            build_hamiltonian(WEAK, n_max=0)

    def test_non_hermitian_rejected(self):
        """Test that diagonalize refuses a non-Hermitian operator."""
        h = build_hamiltonian(WEAK, n_max=2)
        skew = h @ charge_operator(2)
        with pytest.raises(ValueError):
            diagonalize(skew)


class TestDiagonalize:
    """Tests for the spectrum and its parities."""

    def test_free_rotor_levels(self):
        """Test n²E_C levels with exact parities when E_J = 0."""
        spectrum = diagonalize(build_hamiltonian(JunctionParams(e_c=1.0, e_j=0.0), n_max=3))
        np.testing.assert_allclose(spectrum.energies, [0, 1, 1, 4, 4, 9, 9], atol=1e-12)
        assert set(spectrum.parities.tolist()) <= {1, -1}
        # each degenerate pair splits into one even and one odd state
        assert sorted(spectrum.parities[1:3].tolist()) == [-1, 1]
        c = parity_operator(3).entries
        for k in range(spectrum.energies.size):
            psi = spectrum.states[:, k]
            np.testing.assert_allclose(c @ psi, spectrum.parities[k] * psi, atol=1e-12)

    def test_low_levels_match_perturbation(self):
        """Test the exact low levels against second-order energies."""
        spectrum = diagonalize(build_hamiltonian(WEAK, n_max=10))
        assert spectrum.parities[:3].tolist() == [1, -1, 1]
        assert spectrum.energies[0] == pytest.approx(perturbative_energy(0, None, WEAK), abs=1e-5)
        assert spectrum.energies[1] == pytest.approx(perturbative_energy(1, -1, WEAK), abs=1e-5)
        assert spectrum.energies[2] == pytest.approx(perturbative_energy(1, 1, WEAK), abs=1e-5)

    @pytest.mark.parametrize("e_j", [0.01, 0.05, 0.1])
    def test_levels_to_fourth_charge_state(self, e_j):
        """Test every level up to n = 4 of both parities within 5λ³E_C of second order."""
        p = JunctionParams(e_c=1.0, e_j=e_j)
        spectrum = diagonalize(build_hamiltonian(p, n_max=12))
        even = np.sort(spectrum.energies[spectrum.parities == 1])
        odd = np.sort(spectrum.energies[spectrum.parities == -1])
        tolerance = 5.0 * p.lam**3 * p.e_c
        assert abs(even[0] - perturbative_energy(0, None, p)) <= tolerance
        for n in range(1, 5):
            assert abs(even[n] - perturbative_energy(n, 1, p)) <= tolerance
            assert abs(odd[n - 1] - perturbative_energy(n, -1, p)) <= tolerance


class TestExactCorrelation:
    """Tests for the thermal correlation functions."""

    def test_conjugate_symmetry(self):
        """Test G(−t) = G(t)*."""
        times = np.linspace(0.5, 4.0, 8)
        fwd = exact_correlation(WEAK, n_max=8, beta=2.0, times=times)
        bwd = exact_correlation(WEAK, n_max=8, beta=2.0, times=-times[::-1])
        np.testing.assert_allclose(bwd.values[::-1], np.conj(fwd.values), atol=1e-14)

    def test_cutoff_converged(self):
        """Test that doubling the charge cutoff from 20 to 40 changes G(t) by less than 1e-10."""
        times = np.linspace(0.0, 50.0, 101)
        small = exact_correlation(WEAK, n_max=20, beta=10.0, times=times)
        large = exact_correlation(WEAK, n_max=40, beta=10.0, times=times)
        assert np.max(np.abs(small.values - large.values)) < 1e-10

    @pytest.mark.parametrize("beta", [0.5, 2.0, 10.0])
    def test_free_rotor_is_constant(self, beta):
        """Test that G(t) of a junction without tunneling never changes in time."""
        rotor = JunctionParams(e_c=1.0, e_j=0.0)
        series = exact_correlation(rotor, n_max=20, beta=beta, times=np.linspace(0.0, 100.0, 51))
        np.testing.assert_allclose(series.values, np.full(51, series.values[0]), rtol=0.0, atol=1e-12)
        assert series.values[0].real > 0.0

    def test_zero_time_is_real_and_positive(self):
        """Test G(0) = ⟨N²⟩."""
        g = exact_correlation(WEAK, n_max=8, beta=1.0)
        assert g.source is SeriesSource.EXACT
        assert g.values[0].real > 0.0
        assert abs(g.values[0].imag) < 1e-14

    def test_zero_temperature_matches_low_t(self):
        """Test the β → ∞ correlator against (λ²/2)e^{−iE_C t}."""
        times = np.linspace(0.0, 10.0, 101)
        exact = exact_correlation(WEAK, n_max=10, beta=np.inf, times=times)
        approx = g_low_t(WEAK, times)
        assert approx.relative_l2_error(exact) < 0.05

    def test_charge_expectation_vanishes(self):
        """Test ⟨N⟩ = 0 by charge-conjugation symmetry."""
        assert abs(thermal_charge_expectation(WEAK, n_max=8, beta=3.0)) < 1e-12

    def test_cutoff_flag(self):
        """Test that a hot, small-cutoff run is flagged."""
        assert not cutoff_adequate(WEAK, 2, 0.1)
        g = exact_correlation(WEAK, n_max=2, beta=0.1)
        assert g.flags["cutoff_ok"] is False
        assert not g.valid

    def test_nonpositive_beta(self):
        """Test that β <= 0 raises ValueError."""
        with pytest.raises(ValueError):
            exact_correlation(WEAK, beta=0.0)

    def test_imaginary_time(self):
        """Test C(0) = G(0) and the symmetry C(τ) = C(β − τ)."""
        beta = 2.0
        taus = np.array([0.0, 0.5, 1.5, 2.0])
        c = imaginary_time_correlation(WEAK, 8, beta, taus)
        g0 = exact_correlation(WEAK, n_max=8, beta=beta).values[0].real
        assert c[0] == pytest.approx(g0, rel=1e-12)
        assert c[1] == pytest.approx(c[2], rel=1e-10)
        with pytest.raises(ValueError):
            imaginary_time_correlation(WEAK, 8, beta, np.array([3.0]))


class TestCorrelationSeries:
    """Tests for the series container."""

    def test_csv_round_trip(self):
        """Test CSV header echo and values."""
        g = exact_correlation(WEAK, n_max=6, beta=2.0, times=np.linspace(0.0, 1.0, 5))
        text = g.to_csv()
        assert text.startswith("# source=exact e_c=1.0 e_j=0.05")
        assert "# units: hbar=k_B=e=1" in text
        back = CorrelationSeries.from_csv(text)
        np.testing.assert_allclose(back.values, g.values, rtol=1e-12)
        assert back.flags == g.flags
        assert back.params["n_max"] == 6

    def test_offset_and_shape_checks(self):
        """Test with_offset and the equal-length invariant."""
        g = CorrelationSeries(np.array([0.0, 1.0]), np.array([1.0, 2.0]), "harmonic")
        shifted = g.with_offset(0.5)
        np.testing.assert_allclose(shifted.values, [1.5, 2.5])
        assert shifted.params["offset"] == 0.5
        with pytest.raises(ValueError):
            CorrelationSeries(np.array([0.0, 1.0]), np.array([1.0]), "harmonic")
        with pytest.raises(ValueError):
            CorrelationSeries(np.array([1.0, 0.0]), np.array([1.0, 1.0]), "harmonic")


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
