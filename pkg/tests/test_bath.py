import math
import warnings

import numpy as np
import pytest

from drivenqubit import BathSpec, RegimeWarning, power_spectrum, spectral_density

from _oracles import coth_exp


def make_bath(alpha=0.01, omega_c=500.0, temperature=1.0):
    return BathSpec(alpha, omega_c, temperature)


class TestBathSpec:

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            BathSpec(-0.1, 500.0, 1.0)
        with pytest.raises(ValueError):
            BathSpec(0.01, 0.0, 1.0)
        with pytest.raises(ValueError):
            BathSpec(0.01, 500.0, -1.0)

    def test_beta_sentinel_at_zero_temperature(self):
        assert BathSpec(0.01, 500.0, 0.0).beta == math.inf
        assert BathSpec(0.01, 500.0, 2.0).beta == 0.5

    def test_strong_coupling_warning(self):
        with pytest.warns(RegimeWarning):
            BathSpec(0.05, 500.0, 1.0)  # alpha*ln(500) ~ 0.31

    def test_low_cutoff_warning(self):
        with pytest.warns(RegimeWarning):
            BathSpec(0.001, 0.5, 1.0)

    def test_valid_parameters_are_silent(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            BathSpec(0.01, 500.0, 1.0)


class TestSpectralDensity:

    def test_vanishes_at_zero(self):
        assert spectral_density(make_bath(), 0.0) == 0.0

    def test_value_at_cutoff(self):
        bath = make_bath()
        expected = 2 * math.pi * bath.alpha * bath.omega_c * math.exp(-1.0)
        assert spectral_density(bath, bath.omega_c) == pytest.approx(
            expected, rel=1e-15)

    def test_generic_point(self):
        bath = make_bath(alpha=0.01, omega_c=500.0)
        expected = 2 * math.pi * 0.01 * math.exp(-1.0 / 500.0)
        assert spectral_density(bath, 1.0) == pytest.approx(expected,
                                                            rel=1e-15)

    def test_maximum_at_cutoff(self):
        bath = make_bath()
        grid = np.linspace(0.0, 5 * bath.omega_c, 2001)
        values = [spectral_density(bath, w) for w in grid]
        assert grid[int(np.argmax(values))] == pytest.approx(bath.omega_c,
                                                             rel=2e-3)

    def test_rejects_negative_frequency(self):
        with pytest.raises(ValueError):
            spectral_density(make_bath(), -1.0)


class TestPowerSpectrum:

    def test_zero_temperature_limit(self):
        bath = make_bath(temperature=0.0)
        assert power_spectrum(bath, 1.0) == pytest.approx(
            2 * math.pi * bath.alpha, rel=1e-15)

    def test_classical_zero_frequency_limit(self):
        bath = make_bath(alpha=0.01, temperature=10.0)
        assert power_spectrum(bath, 0.0) == pytest.approx(
            4 * math.pi * 0.01 * 10.0, rel=1e-15)

    def test_generic_point_against_exp_oracle(self):
        bath = make_bath(alpha=0.01, temperature=1.0)
        expected = 2 * math.pi * 0.01 * coth_exp(0.5)
        assert power_spectrum(bath, 1.0) == pytest.approx(expected, rel=1e-14)

    def test_continuity_across_series_branch(self):
        bath = make_bath(alpha=0.01, temperature=10.0)
        for omega in (1e-3, 1e-5, 1e-7, 1e-9):
            classical = 4 * math.pi * bath.alpha * bath.temperature
            got = power_spectrum(bath, omega)
            if omega / (2 * bath.temperature) < 1e-4:
                assert got == pytest.approx(classical, rel=1e-6)

    def test_monotone_in_frequency(self):
        bath = make_bath(temperature=2.0)
        grid = np.geomspace(1e-8, 1e4, 300)
        vals = np.array([power_spectrum(bath, w) for w in grid])
        # non-decreasing up to roundoff in the classical plateau
        assert np.all(np.diff(vals) >= -1e-14 * vals[:-1])

    def test_bounded_below_by_zero_temperature_value(self):
        for temperature in (0.0, 0.01, 1.0, 100.0):
            bath = make_bath(temperature=temperature)
            for omega in (0.1, 1.0, 10.0, 1000.0):
                assert power_spectrum(bath, omega) >= \
                    2 * math.pi * bath.alpha * omega - 1e-15

    def test_rejects_negative_frequency(self):
        with pytest.raises(ValueError):
            power_spectrum(make_bath(), -0.5)
