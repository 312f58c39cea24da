"""Tests for chain descriptions, spectral densities and bath correlators."""

import math

import numpy as np
import pytest
from scipy import integrate

from jja_bath.chain import (
    ContinuumChain,
    DiscreteChain,
    Gaussian,
    InverseSinh,
    MonotoneDecomposition,
    Polynomial,
    Profile,
    Rational,
    SpectralDensity,
    SqrtProduct,
    Tabulated,
    chain_from_dict,
    chain_regime_flags,
    check_monotone,
    delta_profile,
    discretize_chain,
    gamma_continuum,
    gamma_discrete,
    gamma_from_spectral,
    harmonic_correlation,
    harmonic_gamma,
    harmonic_spectral_density,
    junction_count,
    offset_gamma0,
    offset_ratio,
    spectral_density_large_ec,
    zero_temperature_gamma0,
)
from jja_bath.chain.spec import HARMONIC
from jja_bath.errors import DecompositionError, RegimeError
from jja_bath.junction import JunctionParams, SeriesSource, exact_correlation

EPS = 0.1


def linear_chain(**overrides) -> ContinuumChain:
    """100 junctions with E_C rising linearly from 1 to 2 and E_J = 0.01."""
    fields = dict(
        domain=(0.0, 1.0),
        density=Polynomial([100.0]),
        ec_profile=Polynomial([1.0, 1.0]),
        ej_profile=Polynomial([0.01]),
        monotone_intervals=((0.0, 1.0),),
        coupling_eps=EPS,
        label="linear",
    )
    fields.update(overrides)
    return ContinuumChain(**fields)


def parabolic_chain() -> ContinuumChain:
    """E_C = 1 + x² on [−1, 1], two monotone branches."""
    return ContinuumChain(
        domain=(-1.0, 1.0),
        density=Polynomial([100.0]),
        ec_profile=Polynomial([1.0, 0.0, 1.0]),
        ej_profile=Polynomial([0.01]),
        monotone_intervals=((-1.0, 0.0), (0.0, 1.0)),
        coupling_eps=EPS,
    )


def box_gamma(times: np.ndarray) -> np.ndarray:
    """Closed-form Γ(t) of the linear chain."""
    level = 0.5 * EPS**2 * 100.0 * 0.01**2
    out = np.full(times.size, level, dtype=complex)
    nz = times != 0.0
    out[nz] = level * (np.exp(-1j * times[nz]) - np.exp(-2j * times[nz])) / (1j * times[nz])
    return out


class TestProfiles:
    """Tests for the position profiles."""

    @pytest.mark.parametrize(
        "profile",
        [
            Polynomial([1.0, -2.0, 0.5]),
            Rational([1.0, 1.0], [2.0, 0.0, 1.0], abs_power=1),
            Gaussian(2.0, 0.3, 0.7),
            InverseSinh(0.5, 2.0),
            SqrtProduct(2.0, Polynomial([1.0, 1.0]), Polynomial([3.0])),
        ],
    )
    def test_derivative_matches_finite_difference(self, profile):
        """Test analytic derivatives against central differences."""
        x, h = 0.6, 1e-6
        numeric = (profile.value(x + h) - profile.value(x - h)) / (2 * h)
        assert profile.derivative(x) == pytest.approx(numeric, rel=1e-6)

    def test_dict_round_trip(self):
        """Test {form, params} descriptors, nested ones included."""
        profile = SqrtProduct(2.0, Gaussian(1.0, 0.0, 1.0), InverseSinh(1.0, 1.0))
        back = Profile.from_dict(profile.to_dict())
        assert back.value(0.4) == pytest.approx(profile.value(0.4))

    def test_unknown_form(self):
        """Test that an unknown form tag raises ValueError."""
        with pytest.raises(ValueError):
            Profile.from_dict({"form": "spline9", "params": {}})

    def test_tabulated(self):
        """Test the spline profile and its node checks."""
        tab = Tabulated.sample(lambda x: x**2, 0.0, 1.0, points=201)
        assert tab.value(0.5) == pytest.approx(0.25, rel=1e-6)
        assert tab.derivative(0.5) == pytest.approx(1.0, rel=1e-4)
        with pytest.raises(ValueError):
            Tabulated([0.0, 1.0, 2.0], [0.0, 1.0, 4.0])

    def test_array_evaluation(self):
        """Test that arrays map to arrays and scalars to floats."""
        p = Polynomial([0.0, 1.0])
        assert isinstance(p.value(0.5), float)
        np.testing.assert_allclose(p.value(np.array([0.0, 2.0])), [0.0, 2.0])


class TestChainSpecs:
    """Tests for chain validation and JSON descriptors."""

    def test_discrete_chain(self):
        """Test the discrete chain arrays and round trip."""
        chain = DiscreteChain((JunctionParams(1.0, 0.1), JunctionParams(2.0, 0.2)), 0.05)
        assert len(chain) == 2
        np.testing.assert_allclose(chain.e_c, [1.0, 2.0])
        back = chain_from_dict(chain.to_dict())
        assert back == chain

    def test_discrete_chain_invalid(self):
        """Test empty chains and nonpositive couplings."""
        with pytest.raises(ValueError):
            DiscreteChain((), 0.1)
        with pytest.raises(ValueError):
            DiscreteChain((JunctionParams(1.0, 0.1),), 0.0)

    def test_continuum_round_trip(self):
        """Test that a continuum chain survives to_dict/from_dict."""
        chain = linear_chain()
        back = chain_from_dict(chain.to_dict())
        assert back.domain == chain.domain
        assert back.label == "linear"
        assert back.ec_profile.value(0.3) == pytest.approx(1.3)

    def test_unknown_kind(self):
        """Test that an unknown chain kind raises ValueError."""
        with pytest.raises(ValueError):
            chain_from_dict({"kind": "ring"})

    def test_negative_density(self):
        """Test that ν < 0 is rejected."""
        with pytest.raises(ValueError):
            linear_chain(density=Polynomial([-1.0]))

    def test_intervals_must_tile_domain(self):
        """Test gaps and overhangs in the monotone intervals."""
        with pytest.raises(ValueError):
            linear_chain(monotone_intervals=((0.0, 0.4), (0.5, 1.0)))
        with pytest.raises(ValueError):
            linear_chain(monotone_intervals=((0.0, 0.9),))

    def test_junction_count(self):
        """Test N_J = ∫ν dx."""
        assert junction_count(linear_chain()) == pytest.approx(100.0)


class TestDecomposition:
    """Tests for the monotone decomposition of E_C(x)."""

    def test_check_monotone(self):
        """Test the derivative sign and an endpoint zero."""
        assert check_monotone(Polynomial([0.0, 0.0, 1.0]), (0.0, 1.0)) == 1
        assert check_monotone(Polynomial([0.0, -1.0]), (0.0, 1.0)) == -1
        with pytest.raises(DecompositionError) as info:
            check_monotone(Polynomial([0.0, 0.0, 1.0]), (-1.0, 1.0))
        assert info.value.interval == (-1.0, 1.0)

    def test_preimages(self):
        """Test both branches of a parabola."""
        dec = MonotoneDecomposition(Polynomial([1.0, 0.0, 1.0]), [(-1.0, 0.0), (0.0, 1.0)])
        assert dec.support == (1.0, 2.0)
        pre = sorted(dec.preimages(1.25))
        assert pre[0][0] == pytest.approx(-0.5, abs=1e-10)
        assert pre[1][0] == pytest.approx(0.5, abs=1e-10)
        assert pre[0][1] == pytest.approx(1.0, rel=1e-8)

    def test_stationary_endpoint_stays_finite(self):
        """Test the inward nudge at a stationary point."""
        dec = MonotoneDecomposition(Polynomial([1.0, 0.0, 1.0]), [(0.0, 1.0)])
        ((x, jac),) = dec.preimages(1.0)
        assert x > 0.0
        assert math.isfinite(jac)


class TestLargeEcChain:
    """Tests for Γ(t), J(E) and the offsets of a large-E_C chain."""

    def test_spectral_density_constant(self):
        """Test J = 2νE_J²|dx/dE_C| on a linear E_C profile."""
        j = spectral_density_large_ec(linear_chain())
        assert j.support == (1.0, 2.0)
        assert j.evaluate(1.5) == pytest.approx(0.02, rel=1e-10)
        assert j.evaluate(2.5) == 0.0
        assert j.area() == pytest.approx(0.02, rel=1e-8)

    def test_spectral_density_two_branches(self):
        """Test that both branches of a non-monotone profile contribute."""
        j = spectral_density_large_ec(parabolic_chain())
        assert j.evaluate(1.25) == pytest.approx(0.04, rel=1e-8)

    def test_non_monotone_interval(self):
        """Test that an undeclared turning point raises DecompositionError."""
        chain = ContinuumChain(
            domain=(-1.0, 1.0),
            density=Polynomial([1.0]),
            ec_profile=Polynomial([1.0, 0.0, 1.0]),
            ej_profile=Polynomial([0.01]),
            monotone_intervals=((-1.0, 1.0),),
            coupling_eps=EPS,
        )
        with pytest.raises(DecompositionError):
            spectral_density_large_ec(chain)

    def test_three_routes_agree(self):
        """Test Γ(t) from J(E), from position space and from the closed form."""
        times = np.linspace(0.0, 20.0, 41)
        chain = linear_chain()
        via_j = gamma_from_spectral(spectral_density_large_ec(chain), EPS, times)
        direct = gamma_continuum(chain, times)
        expected = box_gamma(times)
        np.testing.assert_allclose(via_j.values, expected, atol=1e-12)
        np.testing.assert_allclose(direct.values, expected, atol=1e-12)
        assert direct.source is SeriesSource.CHAIN_CONTINUUM
        assert direct.valid

    def test_zero_time_value(self):
        """Test Re Γ(0) = (ε_I²/2)∫νE_J² dx."""
        assert zero_temperature_gamma0(linear_chain()) == pytest.approx(5e-5, rel=1e-10)

    def test_discretized_chain_matches_continuum(self):
        """Test the stratified discretization against the continuum Γ(t)."""
        times = np.linspace(0.0, 5.0, 11)
        chain = linear_chain()
        discrete = discretize_chain(chain, 100)
        assert len(discrete) == 100
        np.testing.assert_allclose(gamma_discrete(discrete, times).values, box_gamma(times), rtol=1e-3)

    def test_seeded_discretization(self):
        """Test that a seed makes the random draw reproducible."""
        a = discretize_chain(linear_chain(), 20, seed=4)
        b = discretize_chain(linear_chain(), 20, seed=4)
        np.testing.assert_array_equal(a.e_c, b.e_c)

    def test_offset(self):
        """Test Γ₀ against direct quadrature and its zero-temperature limit."""
        chain = linear_chain()
        beta = 1.5
        direct, _ = integrate.quad(lambda e: e**2 * math.exp(-beta * e), 1.0, 2.0)
        assert offset_gamma0(chain, beta) == pytest.approx(2.0 * EPS**2 * 100.0 * direct, rel=1e-8)
        assert offset_gamma0(chain, math.inf) == 0.0
        assert offset_ratio(chain, beta) == pytest.approx(offset_gamma0(chain, beta) / 5e-5)
        with pytest.raises(ValueError):
            offset_gamma0(chain, -1.0)


class TestRegime:
    """Tests for Δ(x) and the validity flags."""

    def test_delta_star(self):
        """Test Δ* = E_C/ln(E_C/E_J) at the low-E_C end."""
        delta = delta_profile(linear_chain())
        assert delta.delta_star == pytest.approx(1.0 / math.log(100.0), rel=1e-9)
        assert delta.x_star == pytest.approx(0.0, abs=1e-6)
        assert delta(1.0) == pytest.approx(2.0 / math.log(200.0))

    def test_delta_undefined(self):
        """Test that E_J >= E_C raises RegimeError."""
        with pytest.raises(RegimeError):
            delta_profile(linear_chain(ej_profile=Polynomial([1.5])))

    def test_flags(self, caplog):
        """Test the margins and the warning when the chain is too hot."""
        cold = chain_regime_flags(linear_chain())
        assert cold.small_ej and cold.small_ej_width and cold.zero_temperature
        assert cold.ej_over_ec == pytest.approx(0.01)
        with caplog.at_level("WARNING"):
            hot = chain_regime_flags(linear_chain(), beta=1.0)
        assert not hot.zero_temperature
        assert "zero_temperature" in caplog.text
        assert hot.to_dict()["temperature_over_delta_star"] == pytest.approx(math.log(100.0), rel=1e-6)


class TestHarmonic:
    """Tests for large-E_J junctions and harmonic chains."""

    def test_single_junction_zero_temperature(self):
        """Test G(0) = ω/4E_C against the exact transmon-like junction."""
        p = JunctionParams(e_c=1.0, e_j=200.0)
        g = harmonic_correlation(p, math.inf, np.array([0.0]))
        assert g.values[0].real == pytest.approx(5.0)
        assert g.flags == {"large_ej": True, "cold": True}
        exact = exact_correlation(p, n_max=30, beta=math.inf).values[0].real
        assert g.values[0].real == pytest.approx(exact, rel=0.05)

    def test_free_rotor_limit(self):
        """Test the ω → 0 limit 1/(2βE_C)."""
        g = harmonic_correlation(JunctionParams(e_c=1.0, e_j=0.0), 2.0, np.array([0.0, 1.0]))
        np.testing.assert_allclose(g.values, 0.25)

    def test_spectral_density(self):
        """Test J(ω) = ν ω²/50 for E_C = 1 and E_J = 50(1 + x)."""
        chain = ContinuumChain(
            domain=(0.0, 1.0),
            density=Polynomial([10.0]),
            ec_profile=Polynomial([1.0]),
            ej_profile=Polynomial([50.0, 50.0]),
            monotone_intervals=((0.0, 1.0),),
            coupling_eps=EPS,
            regime=HARMONIC,
        )
        j = harmonic_spectral_density(chain)
        assert j.support[0] == pytest.approx(10.0)
        assert j.support[1] == pytest.approx(10.0 * math.sqrt(2.0))
        assert j.evaluate(12.0) == pytest.approx(28.8, rel=1e-8)

        series, j2 = harmonic_gamma(chain, math.inf, np.array([0.0]))
        assert series.values[0].real == pytest.approx((0.5 * EPS) ** 2 * j2.area(), rel=1e-8)
        assert series.values[0].imag == pytest.approx(0.0, abs=1e-14)


class TestSpectralDensity:
    """Tests for the SpectralDensity container."""

    def test_box(self):
        """Test support, area and CSV echo of a box density."""
        j = SpectralDensity.box(2.0, 1.0, 3.0)
        assert j.area() == pytest.approx(4.0)
        frame = j.tabulate([0.5, 2.0])
        assert frame["J"].tolist() == [0.0, 2.0]
        assert "support_lo=1.0" in j.to_csv([2.0]).splitlines()[0]

    def test_default_grid(self):
        """Test the padded grid never goes below zero."""
        grid = SpectralDensity.box(1.0, 0.1, 1.1).default_grid(points=11)
        assert grid[0] == 0.0
        assert grid[-1] == pytest.approx(1.3)

    def test_empty_support(self):
        """Test that a reversed support raises ValueError."""
        with pytest.raises(ValueError):
            SpectralDensity.box(1.0, 2.0, 1.0)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
