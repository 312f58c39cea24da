"""Tests for the large-E_C ↔ large-E_J chain correspondence."""

import math

import numpy as np
import pytest

from jja_bath.chain import ContinuumChain, Polynomial, Rational, Tabulated
from jja_bath.chain.spec import HARMONIC
from jja_bath.duality import map_to_large_ej, mapped_chain, verify_duality
from jja_bath.errors import RegimeError
from jja_bath.gksl import OscillatorParams
from jja_bath.scenarios import DisorderChainParams, LorentzianChainParams, disorder_chain_continuum, lorentzian_chain


def linear_chain(e_j: float) -> ContinuumChain:
    return ContinuumChain(
        domain=(0.0, 1.0),
        density=Polynomial([100.0]),
        ec_profile=Polynomial([1.0, 1.0]),
        ej_profile=Polynomial([e_j]),
        monotone_intervals=((0.0, 1.0),),
        coupling_eps=0.1,
    )


class TestMapping:
    """Tests for the mapped profiles."""

    def test_symbolic_profiles(self):
        """Test Ẽ_C = 2E_J²/E_C and Ẽ_J = E_C³/4E_J² for rational inputs."""
        chain, _ = lorentzian_chain(LorentzianChainParams())
        dual = map_to_large_ej(chain)
        assert isinstance(dual.mapped_ec_profile, Rational)
        assert isinstance(dual.mapped_ej_profile, Rational)
        x = 0.7
        e_c = chain.ec_profile.value(x)
        e_j = chain.ej_profile.value(x)
        assert dual.mapped_ec_profile.value(x) == pytest.approx(2.0 * e_j**2 / e_c, rel=1e-12)
        assert dual.mapped_ej_profile.value(x) == pytest.approx(e_c**3 / (4.0 * e_j**2), rel=1e-12)
        assert dual.mapped_omega_profile.value(x) == pytest.approx(e_c, rel=1e-12)

    def test_tabulated_profiles(self):
        """Test that non-rational profiles are splined."""
        chain = disorder_chain_continuum(DisorderChainParams.fig6())
        dual = map_to_large_ej(chain)
        assert isinstance(dual.mapped_ec_profile, Tabulated)
        assert dual.mapped_omega_profile.value(1.0) == pytest.approx(1.0, rel=1e-6)

    def test_beta_bound(self):
        """Test β̃ = β / ln[E_C/E_J]_min."""
        chain, _ = lorentzian_chain(LorentzianChainParams())
        dual = map_to_large_ej(chain, beta=10.0)
        assert dual.log_ratio_min == pytest.approx(math.log(20.0), rel=1e-9)
        assert dual.beta_bound == pytest.approx(10.0 / math.log(20.0), rel=1e-9)
        assert map_to_large_ej(chain).to_dict()["beta_bound"] is None

    def test_mapped_chain(self):
        """Test the harmonic chain that carries the mapped profiles."""
        chain, _ = lorentzian_chain(LorentzianChainParams())
        dual_chain = mapped_chain(map_to_large_ej(chain))
        assert dual_chain.regime == HARMONIC
        assert dual_chain.label == "lorentzian-dual"
        assert dual_chain.monotone_intervals == chain.monotone_intervals
        assert dual_chain.to_dict()["kind"] == "harmonic"

    def test_rejects_harmonic_source(self):
        """Test that a harmonic chain cannot be mapped again."""
        chain, _ = lorentzian_chain(LorentzianChainParams())
        with pytest.raises(RegimeError):
            map_to_large_ej(mapped_chain(map_to_large_ej(chain)))

    def test_rejects_vanishing_ej(self):
        """Test that E_J = 0 raises RegimeError."""
        with pytest.raises(RegimeError):
            map_to_large_ej(linear_chain(0.0))

    def test_rejects_large_ej(self):
        """Test that a source outside the large-E_C regime raises RegimeError."""
        with pytest.raises(RegimeError):
            map_to_large_ej(linear_chain(0.5))


class TestVerification:
    """Tests for verify_duality."""

    def test_lorentzian_densities_agree(self):
        """Test J(E_C) = J̃(ω) and equal κ on the Lorentzian chain."""
        chain, _ = lorentzian_chain(LorentzianChainParams())
        report = verify_duality(map_to_large_ej(chain), np.linspace(1.01, 1.19, 10))
        assert report.probe_points == 10
        assert report.max_relative_deviation < 1e-6
        assert report.kappa_relative_deviation < 1e-6
        assert report.lamb_shift_relative_deviation < 1e-4
        assert report.max_mapped_ratio == pytest.approx(8.0 * 0.05**4, rel=1e-9)
        assert report.omega0 == pytest.approx(1.1)

    def test_disorder_densities_agree(self):
        """Test the tabulated mapping on the disorder chain."""
        chain = disorder_chain_continuum(DisorderChainParams.fig6())
        osc = OscillatorParams(omega0=1.0, e_q=2.0, eps_i=0.01)
        report = verify_duality(map_to_large_ej(chain), np.linspace(0.5, 1.5, 11), osc)
        assert report.max_relative_deviation < 1e-4
        assert report.kappa_relative_deviation < 1e-4
        assert report.to_dict()["omega0"] == 1.0

    def test_probes_outside_support(self):
        """Test that probes outside the common support raise ValueError."""
        chain, _ = lorentzian_chain(LorentzianChainParams())
        with pytest.raises(ValueError):
            verify_duality(map_to_large_ej(chain), [5.0, 6.0])

    def test_probes_are_clipped(self):
        """Test that out-of-support probes are dropped."""
        chain, _ = lorentzian_chain(LorentzianChainParams())
        report = verify_duality(map_to_large_ej(chain), [0.5, 1.1, 3.0])
        assert report.probe_points == 1


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
