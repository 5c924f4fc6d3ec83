"""Molecular-model signals with a single high-frequency vibrational mode.

A three-band electronic system is diagonally coupled to a harmonic bath.
Second-order cumulants split the lineshape function into a quadratic
low-frequency decay, carried by the single knob D (fs^-2, temperature
already folded in), and a high-frequency oscillatory part weighted by the
Huang-Rhys factor F.  Expanding the high-frequency exponential produces a
Poissonian progression of vibronic lines S_n = e^-F F^n / n!, and the
closed-form absorption/Raman intensities below are sums over that
progression.  The Raman terms carry an extra sqrt(pi) / ((n*omega_j +
omega_eg) * D) factor from the decay-gated time integral, which is what
makes the Raman signal inversely proportional to D (and hence to
temperature when D is scaled proportionally to T).

Intensities are relative (arbitrary units) but carry the squared dipole
products, so ratios between the two processes include the same material
factor as the three-level model.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import SingularModelError
from .photon_source import PhotonPairSource
from .units import KB_EV_K, ev_to_angular_fs

_SQRT2 = math.sqrt(2.0)
_SQRT_PI = math.sqrt(math.pi)


@dataclass(frozen=True)
class VibrationalMode:
    """One high-frequency mode plus the low-frequency decay strength.

    omega_j is the mode energy in eV, huang_rhys the dimensionless coupling,
    low_freq_decay the quadratic dephasing rate D in fs^-2 (proportional to
    temperature), and lam an optional coupling used only by the reference
    lineshape; it defaults to huang_rhys.
    """

    omega_j: float
    huang_rhys: float
    low_freq_decay: float
    lam: float | None = None

    def __post_init__(self):
        if not (math.isfinite(self.omega_j) and self.omega_j > 0):
            raise ValueError(f"omega_j must be positive, got {self.omega_j!r}")
        if not (math.isfinite(self.huang_rhys) and self.huang_rhys >= 0):
            raise ValueError(f"huang_rhys must be >= 0, got {self.huang_rhys!r}")
        if not (math.isfinite(self.low_freq_decay) and self.low_freq_decay >= 0):
            raise ValueError(f"low_freq_decay must be >= 0, got {self.low_freq_decay!r}")

    @property
    def coupling(self) -> float:
        return self.huang_rhys if self.lam is None else self.lam


@dataclass(frozen=True)
class VibronicSystem:
    """Electronic gaps, dipoles, one vibrational mode, and a temperature."""

    omega_eg: float
    omega_fe: float
    omega_eg1: float
    omega_eg2: float
    mu_eg: float
    mu_fe: float
    mu_eg1: float
    mu_eg2: float
    mode: VibrationalMode
    temperature: float

    def __post_init__(self):
        for name in ("omega_eg", "omega_fe", "omega_eg1", "omega_eg2"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be positive and finite, got {v!r}")
        if not (math.isfinite(self.temperature) and self.temperature > 0):
            raise ValueError(f"temperature must be positive, got {self.temperature!r}")

    @property
    def omega_fg(self) -> float:
        return self.omega_eg + self.omega_fe


def lineshape_exact(mode: VibrationalMode, t: float, temperature: float) -> complex:
    """Reference undamped-oscillator lineshape function (dimensionless).

    lam^2 [coth(beta hbar omega_j / 2)(1 - cos(omega_j t)) + i(sin(omega_j t) - omega_j t)]
    with t in fs.  Kept verbatim for reference; the split low/high forms
    below are the ones entering the signals.
    """
    if not math.isfinite(t):
        raise ValueError("t must be finite")
    lam = mode.coupling
    wt = ev_to_angular_fs(mode.omega_j) * t
    x = mode.omega_j / (2.0 * KB_EV_K * temperature)
    coth = 1.0 / math.tanh(x)
    return lam * lam * complex(coth * (1.0 - math.cos(wt)), math.sin(wt) - wt)


def lineshape_low(mode: VibrationalMode, t: float, temperature: float | None = None) -> float:
    """Low-frequency part: -D t^2 with t in fs.

    The knob D already contains the k_B T omega_j / hbar factor, so the
    temperature argument is accepted for signature symmetry but unused.
    """
    del temperature
    return -mode.low_freq_decay * t * t


def lineshape_high(mode: VibrationalMode, t: float) -> complex:
    """High-frequency part: F (1 - exp(-i omega_j t)) with t in fs."""
    wt = ev_to_angular_fs(mode.omega_j) * t
    return mode.huang_rhys * (1.0 - complex(math.cos(wt), -math.sin(wt)))


def phi_egeg(mode: VibrationalMode, u: float, temperature: float | None = None) -> complex:
    """Raman-pathway cumulant exponent: -D u^2 - F (1 - exp(i omega_j u))."""
    del temperature
    wu = ev_to_angular_fs(mode.omega_j) * u
    low = -mode.low_freq_decay * u * u
    return low - mode.huang_rhys * (1.0 - complex(math.cos(wu), math.sin(wu)))


def phi_efeg(mode: VibrationalMode, dt: float) -> complex:
    """Absorption-pathway cumulant exponent: F (exp(i omega_j dt) - 1)."""
    wdt = ev_to_angular_fs(mode.omega_j) * dt
    return mode.huang_rhys * (complex(math.cos(wdt), math.sin(wdt)) - 1.0)


def franck_condon(huang_rhys: float, n: int) -> float:
    """Poisson vibronic weight S_n = e^-F F^n / n!, evaluated in log space."""
    if not (isinstance(n, int) and n >= 0):
        raise ValueError(f"n must be a non-negative integer, got {n!r}")
    if not (math.isfinite(huang_rhys) and huang_rhys >= 0):
        raise ValueError(f"huang_rhys must be >= 0, got {huang_rhys!r}")
    if huang_rhys == 0.0:
        return 1.0 if n == 0 else 0.0
    return math.exp(-huang_rhys + n * math.log(huang_rhys) - math.lgamma(n + 1))


@lru_cache(maxsize=512)
def franck_condon_weights(huang_rhys: float, n_max: int) -> tuple[float, ...]:
    return tuple(franck_condon(huang_rhys, n) for n in range(n_max + 1))


def delta_srs(system: VibronicSystem, src: PhotonPairSource) -> float:
    """Sum-frequency detuning of the Raman pathway (eV)."""
    return src.omega_sum - (system.omega_eg1 + system.omega_eg2)


def delta_tpa(system: VibronicSystem, src: PhotonPairSource) -> float:
    """Difference-type detuning of the absorption pathway (eV)."""
    return (src.omega_i0 - src.omega_s0) + (system.omega_fe - system.omega_eg)


def p_srs_vibronic(
    system: VibronicSystem,
    src: PhotonPairSource,
    n_max: int = 30,
    swap_photon_roles: bool = False,
) -> float:
    """Stimulated-Raman intensity summed over the vibronic progression.

    Each n-term places a Raman line at omega_diff = n * omega_j, gated by a
    sum-frequency Gaussian, and weighted by the decay prefactor
    sqrt(pi) / ((n omega_j + omega_eg)[fs^-1] * D).  ``swap_photon_roles``
    mirrors the line spectrum (omega_diff -> -omega_diff), i.e. the signal
    photon is absorbed first instead of the idler.
    """
    if not (isinstance(n_max, int) and n_max >= 0):
        raise ValueError(f"n_max must be a non-negative integer, got {n_max!r}")
    mode = system.mode
    if mode.low_freq_decay == 0.0:
        raise SingularModelError(
            "low_freq_decay = 0 makes the Raman time integral non-decaying"
        )
    w_minus = -src.omega_diff if swap_photon_roles else src.omega_diff
    delta = delta_srs(system, src)
    weights = franck_condon_weights(mode.huang_rhys, n_max)
    total = 0.0
    for n, s_n in enumerate(weights):
        line = math.exp(-(((w_minus - n * mode.omega_j) / src.sigma_m) ** 2))
        gate = math.exp(-(((n * mode.omega_j - delta) / (_SQRT2 * src.sigma_p)) ** 2))
        rate = _SQRT_PI / (
            ev_to_angular_fs(n * mode.omega_j + system.omega_eg) * mode.low_freq_decay
        )
        total += s_n * line * rate * gate
    return (system.mu_eg1 * system.mu_eg2) ** 2 * total


def p_tpa_vibronic(
    system: VibronicSystem, src: PhotonPairSource, n_max: int = 30
) -> float:
    """Two-photon absorption intensity summed over the vibronic progression.

    The n-th term peaks at omega_sum = omega_fg - n * omega_j; no decay
    prefactor appears because the absorption happens faster than the
    low-frequency bath motion.
    """
    if not (isinstance(n_max, int) and n_max >= 0):
        raise ValueError(f"n_max must be a non-negative integer, got {n_max!r}")
    mode = system.mode
    delta = delta_tpa(system, src)
    weights = franck_condon_weights(mode.huang_rhys, n_max)
    w_plus = src.omega_sum
    w_fg = system.omega_fg
    total = 0.0
    for n, s_n in enumerate(weights):
        gate = math.exp(-(((w_plus - w_fg + n * mode.omega_j) / (_SQRT2 * src.sigma_p)) ** 2))
        line = math.exp(-(((n * mode.omega_j - delta) / (_SQRT2 * src.sigma_m)) ** 2))
        total += s_n * gate * line
    return (system.mu_eg * system.mu_fe) ** 2 * total


def ratio_vibronic(
    system: VibronicSystem,
    src_tpa: PhotonPairSource,
    src_srs: PhotonPairSource,
    n_max: int = 30,
) -> float:
    """Absorption/Raman intensity ratio; sources may be identical or distinct."""
    num = p_tpa_vibronic(system, src_tpa, n_max)
    den = p_srs_vibronic(system, src_srs, n_max)
    if den == 0.0 or not math.isfinite(den):
        raise SingularModelError(
            f"Raman intensity underflowed to {den!r} "
            f"(omega_sum={src_srs.omega_sum!r}, omega_diff={src_srs.omega_diff!r}); "
            "the ratio is not representable"
        )
    return num / den
