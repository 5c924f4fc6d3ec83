"""Two-photon state of a parametric down-conversion (PDC) source.

The pair is modelled by a real Gaussian joint spectral amplitude that
factorises in the frequency-sum and frequency-difference coordinates, with
bandwidths sigma_p (sum) and sigma_m (difference).  sigma_p > sigma_m gives
frequency-correlated pairs, the reverse anti-correlated ones.  No
phase-matching sinc factor or chirp is included, so the amplitude is real
and positive everywhere.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError
from .grids import Grid
from .units import HBAR_EV_FS


class Correlation(enum.Enum):
    CORRELATED = "correlated"
    ANTI_CORRELATED = "anti-correlated"
    UNCORRELATED = "uncorrelated"


@dataclass(frozen=True)
class PhotonPairSource:
    """PDC pair: signal/idler central frequencies and sum/difference bandwidths.

    All fields are in eV; use :meth:`from_fs_bandwidths` for the customary
    fs^-1 bandwidth inputs.
    """

    omega_s0: float
    omega_i0: float
    sigma_p: float
    sigma_m: float

    def __post_init__(self):
        for name in ("omega_s0", "omega_i0", "sigma_p", "sigma_m"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be positive and finite, got {v!r}")

    @classmethod
    def from_fs_bandwidths(
        cls, omega_s0: float, omega_i0: float, sigma_p_fs: float, sigma_m_fs: float
    ) -> "PhotonPairSource":
        """Construct with bandwidths given in fs^-1."""
        return cls(omega_s0, omega_i0, sigma_p_fs * HBAR_EV_FS, sigma_m_fs * HBAR_EV_FS)

    @property
    def omega_sum(self) -> float:
        """Sum of the central frequencies."""
        return self.omega_s0 + self.omega_i0

    @property
    def omega_diff(self) -> float:
        """Signal-minus-idler central frequency difference."""
        return self.omega_s0 - self.omega_i0


def jsa(src: PhotonPairSource, omega_s: float, omega_i: float) -> float:
    """Joint spectral amplitude at (omega_s, omega_i), in eV^-1.

    Normalised so the intensity integrates to one over the whole plane.
    """
    ds = omega_s - src.omega_s0
    di = omega_i - src.omega_i0
    norm = 1.0 / math.sqrt(math.pi * src.sigma_m * src.sigma_p)
    return norm * math.exp(
        -(((ds + di) / (2.0 * src.sigma_p)) ** 2)
        - ((ds - di) / (2.0 * src.sigma_m)) ** 2
    )


def jsi(src: PhotonPairSource, omega_s: float, omega_i: float) -> float:
    """Joint spectral intensity |jsa|^2, in eV^-2."""
    a = jsa(src, omega_s, omega_i)
    return a * a


def correlation_class(src: PhotonPairSource) -> Correlation:
    """Classify the source by the ordering of its two bandwidths.

    Equal bandwidths (to 1e-12 relative) are reported as uncorrelated.
    """
    if abs(src.sigma_p - src.sigma_m) <= 1e-12 * max(src.sigma_p, src.sigma_m):
        return Correlation.UNCORRELATED
    if src.sigma_p > src.sigma_m:
        return Correlation.CORRELATED
    return Correlation.ANTI_CORRELATED


def _axis(rng: tuple[float, float, int], name: str) -> np.ndarray:
    lo, hi, n = rng
    if not (isinstance(n, int) and n >= 2):
        raise ConfigError(f"{name}: count must be an integer >= 2, got {n!r}")
    if not (math.isfinite(lo) and math.isfinite(hi) and hi > lo):
        raise ConfigError(f"{name}: need finite max > min, got ({lo!r}, {hi!r})")
    return np.linspace(lo, hi, n)


def jsi_grid(
    src: PhotonPairSource,
    s_range: tuple[float, float, int],
    i_range: tuple[float, float, int],
) -> Grid:
    """Sample the JSI on the tensor grid s_range x i_range, each (min, max, n)."""
    s = _axis(s_range, "s_range")
    i = _axis(i_range, "i_range")
    ds = s[:, None] - src.omega_s0
    di = i[None, :] - src.omega_i0
    amp = math.sqrt(1.0 / (math.pi * src.sigma_m * src.sigma_p)) * np.exp(
        -(((ds + di) / (2.0 * src.sigma_p)) ** 2)
        - ((ds - di) / (2.0 * src.sigma_m)) ** 2
    )
    meta = {
        "kind": "jsi",
        "source": {
            "omega_s0_ev": src.omega_s0,
            "omega_i0_ev": src.omega_i0,
            "sigma_p_ev": src.sigma_p,
            "sigma_m_ev": src.sigma_m,
        },
    }
    return Grid("omega_s [eV]", "omega_i [eV]", s, i, amp * amp, metadata=meta)
