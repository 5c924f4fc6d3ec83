"""Closed-form two-photon absorption and Raman probabilities for three-level systems.

The transition amplitude for the absorption ladder g -> e -> f carries a
Gaussian sum-frequency gate and an intermediate-state resonance bracket
whose principal-value part is approximated by a Gaussian-times-quadratic
form (the exact Dawson-function value lives in :mod:`entspec.oracle`).
Single-process probabilities are in arbitrary units; only ratios are
physical outputs, with dipole moments entering as a dimensionless ratio.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .photon_source import PhotonPairSource

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class ThreeLevelTPA:
    """Absorption ladder g -> e -> f: transition energies (eV) and dipoles (Debye)."""

    omega_eg: float
    omega_fe: float
    mu_eg: float
    mu_fe: float

    def __post_init__(self):
        for name in ("omega_eg", "omega_fe", "mu_eg", "mu_fe"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be positive and finite, got {v!r}")

    @property
    def omega_fg(self) -> float:
        """Two-photon transition energy g -> f."""
        return self.omega_eg + self.omega_fe


@dataclass(frozen=True)
class ThreeLevelRaman:
    """Raman lambda system g1 -> e -> g2: transition energies (eV) and dipoles (Debye)."""

    omega_eg1: float
    omega_eg2: float
    mu_eg1: float
    mu_eg2: float

    def __post_init__(self):
        for name in ("omega_eg1", "omega_eg2", "mu_eg1", "mu_eg2"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be positive and finite, got {v!r}")


@dataclass(frozen=True)
class DetuningSet:
    """The four central-frequency detunings entering the probability ratio (eV)."""

    d_eg: float
    d_fe: float
    d_eg1: float
    d_eg2: float

    def __post_init__(self):
        for name in ("d_eg", "d_fe", "d_eg1", "d_eg2"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")

    @classmethod
    def from_central_frequencies(
        cls,
        tpa: ThreeLevelTPA,
        raman: ThreeLevelRaman,
        src_tpa: PhotonPairSource,
        src_srs: PhotonPairSource,
    ) -> "DetuningSet":
        """Idler-first construction rule: the idler drives the first interaction."""
        return cls(
            d_eg=src_tpa.omega_i0 - tpa.omega_eg,
            d_fe=src_tpa.omega_s0 - tpa.omega_fe,
            d_eg1=src_srs.omega_i0 - raman.omega_eg1,
            d_eg2=src_srs.omega_s0 - raman.omega_eg2,
        )


def omega_all_tpa(system: ThreeLevelTPA, src: PhotonPairSource) -> float:
    """Intermediate-state frequency coefficient of the absorption amplitude (eV)."""
    return 0.5 * (src.omega_i0 + system.omega_fe - system.omega_eg - src.omega_s0)


def omega_all_srs(raman: ThreeLevelRaman, src: PhotonPairSource) -> float:
    """Raman analog of the frequency coefficient: half the sum-frequency detuning (eV)."""
    return 0.5 * (src.omega_sum - raman.omega_eg1 - raman.omega_eg2)


def pv_gaussian_approx(omega_all: float, sigma_m: float) -> float:
    """Gaussian-times-quadratic approximation of the principal-value integral.

    Even in omega_all, unlike the exact (odd) principal value; only the
    modulus squared of the amplitude is ever used, so magnitudes are
    unaffected.
    """
    if not sigma_m > 0:
        raise ValueError(f"sigma_m must be positive, got {sigma_m!r}")
    x = omega_all / sigma_m
    return math.exp(-x * x) * (2.0 * x) ** 2


def tpa_amplitude(system: ThreeLevelTPA, src: PhotonPairSource) -> complex:
    """Two-photon transition amplitude (arbitrary units, propagation phase dropped).

    The resonance bracket combines the on-shell -i*pi Gaussian with the
    principal-value approximation.
    """
    w_all = omega_all_tpa(system, src)
    gate = math.exp(
        -(((system.omega_fe + system.omega_eg - src.omega_sum) / (2.0 * src.sigma_p)) ** 2)
    )
    on_shell = math.exp(-((w_all / src.sigma_m) ** 2))
    bracket = complex(pv_gaussian_approx(w_all, src.sigma_m), -math.pi * on_shell)
    return 2.0 * math.pi * system.mu_eg * system.mu_fe * gate * bracket


def p_tpa_3lvl(system: ThreeLevelTPA, src: PhotonPairSource) -> float:
    """Two-photon absorption probability |amplitude|^2 (arbitrary units)."""
    return abs(tpa_amplitude(system, src)) ** 2


def p_tpa_3lvl_form(system: ThreeLevelTPA, src: PhotonPairSource) -> float:
    """Proportional form of the absorption probability (unit peak value).

    Drops the principal-value contribution and all prefactors; this is the
    quantity entering the closed-form probability ratio.
    """
    w_all = omega_all_tpa(system, src)
    a = (system.omega_fe + system.omega_eg - src.omega_sum) / (_SQRT2 * src.sigma_p)
    b = _SQRT2 * w_all / src.sigma_m
    return math.exp(-a * a - b * b)


def p_srs_3lvl(raman: ThreeLevelRaman, src: PhotonPairSource) -> float:
    """Proportional stimulated-Raman probability (unit peak value).

    Peaks when the central-frequency difference matches the Raman shift
    omega_eg2 - omega_eg1 and the sum matches omega_eg1 + omega_eg2.
    """
    w_all = omega_all_srs(raman, src)
    a = (raman.omega_eg2 - raman.omega_eg1 - src.omega_diff) / (_SQRT2 * src.sigma_m)
    b = _SQRT2 * w_all / src.sigma_p
    return math.exp(-a * a - b * b)


def dipole_ratio(tpa: ThreeLevelTPA, raman: ThreeLevelRaman) -> float:
    """Squared ratio of the two pathways' dipole products; material property."""
    denom = raman.mu_eg2 * raman.mu_eg1
    if denom == 0:
        raise ValueError("Raman dipole product must be nonzero")
    return abs(tpa.mu_eg * tpa.mu_fe / denom) ** 2


def ratio_3lvl(
    tpa: ThreeLevelTPA,
    raman: ThreeLevelRaman,
    src_tpa: PhotonPairSource,
    src_srs: PhotonPairSource,
    detunings: DetuningSet,
) -> float:
    """Closed-form absorption/Raman probability ratio.

    Equals dipole_ratio * bandwidth prefactor * p_tpa_3lvl_form / p_srs_3lvl
    whenever ``detunings`` follows the idler-first construction rule.  The
    Raman-line term uses the signal-minus-idler difference with the same sign
    convention as :func:`p_srs_3lvl`, which is what makes that identity hold.
    """
    prefactor = (src_srs.sigma_m * src_srs.sigma_p) / (src_tpa.sigma_m * src_tpa.sigma_p)
    e_sum = (
        -((tpa.omega_fe + tpa.omega_eg - src_tpa.omega_sum) ** 2)
        / (2.0 * src_tpa.sigma_p**2)
        + (raman.omega_eg2 - raman.omega_eg1 - src_srs.omega_diff) ** 2
        / (2.0 * src_srs.sigma_m**2)
    )
    e_det = (
        -((detunings.d_eg - detunings.d_fe) ** 2) / (2.0 * src_tpa.sigma_m**2)
        + (detunings.d_eg1 + detunings.d_eg2) ** 2 / (2.0 * src_srs.sigma_p**2)
    )
    return dipole_ratio(tpa, raman) * prefactor * math.exp(e_sum) * math.exp(e_det)
