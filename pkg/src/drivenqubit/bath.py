"""Ohmic bath: spectral density and symmetric-fluctuation power spectrum.

Natural units hbar = k_B = 1 with the static qubit splitting Delta as the
frequency unit.  Temperatures are therefore dimensionless (T = 1 means
k_B T = hbar*Delta) and beta = 1/T.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass


class RegimeWarning(UserWarning):
    """Parameters leave the regime in which the closed-form rates hold."""


@dataclass(frozen=True)
class BathSpec:
    """Ohmic bath with J(w) = 2*pi*alpha*w*exp(-w/omega_c).

    alpha       dimensionless coupling strength (> 0)
    omega_c     cutoff frequency in units of Delta (> 0)
    temperature in units of hbar*Delta/k_B; 0 means T = 0 (beta infinite)
    """

    alpha: float
    omega_c: float
    temperature: float = 0.0

    def __post_init__(self):
        if self.alpha < 0.0:
            raise ValueError("alpha must be non-negative")
        if self.omega_c <= 0.0:
            raise ValueError("omega_c must be positive")
        if self.temperature < 0.0:
            raise ValueError("temperature must be non-negative")
        if self.alpha * math.log(max(self.omega_c, 1.0)) > 0.1:
            warnings.warn(
                "weak-coupling condition alpha*ln(omega_c) << 1 violated; "
                "Markovian rates are unreliable here", RegimeWarning,
                stacklevel=2)
        if self.omega_c <= 1.0:
            warnings.warn(
                "cutoff omega_c at or below the qubit splitting; the "
                "high-cutoff master equation assumes omega_c >> Delta",
                RegimeWarning, stacklevel=2)

    @property
    def beta(self) -> float:
        """Inverse temperature; inf at T = 0."""
        return math.inf if self.temperature == 0.0 else 1.0 / self.temperature


def _coth(x: float) -> float:
    # series branch avoids 1/tanh blowup near x = 0
    if x < 1e-6:
        return 1.0 / x + x / 3.0
    return 1.0 / math.tanh(x)


def spectral_density(bath: BathSpec, omega: float) -> float:
    """Ohmic spectral density J(w) = 2*pi*alpha*w*exp(-w/omega_c), w >= 0."""
    if omega < 0.0:
        raise ValueError("spectral density is defined for omega >= 0")
    return 2.0 * math.pi * bath.alpha * omega * math.exp(-omega / bath.omega_c)

def power_spectrum(bath: BathSpec, omega: float) -> float:
    """Bath-fluctuation power spectrum S(w) = 2*pi*alpha*w*coth(w/2T).

    No exponential cutoff here: the cutoff enters the driven rate sums
    explicitly at the harmonic frequencies.  Limits: S -> 4*pi*alpha*T as
    w -> 0 (T > 0) and S = 2*pi*alpha*w at T = 0.
    """
    if omega < 0.0:
        raise ValueError("power spectrum is evaluated at omega >= 0")
    if bath.temperature == 0.0:
        return 2.0 * math.pi * bath.alpha * omega
    if omega == 0.0:
        return 4.0 * math.pi * bath.alpha * bath.temperature
    return (2.0 * math.pi * bath.alpha * omega
            * _coth(0.5 * omega / bath.temperature))
