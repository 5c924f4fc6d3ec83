"""Physical constants and the few unit conversions the simulations need.

Internal convention: every energy and frequency is carried in eV.  The
fs^-1 bandwidths quoted for photon-pair sources are converted on ingestion
via  omega[eV] = hbar * omega[fs^-1].  Dipole moments stay in Debye; they
only ever enter the signals as dimensionless ratios.
"""

from __future__ import annotations

HBAR_EV_FS = 0.6582119569  # reduced Planck constant [eV*fs]
KB_EV_K = 8.617333262e-5  # Boltzmann constant [eV/K]
HC_EV_NM = 1239.8419  # h*c [eV*nm]


def ev_to_angular_fs(energy_ev: float) -> float:
    """Energy in eV to angular frequency in fs^-1."""
    return energy_ev / HBAR_EV_FS


def angular_fs_to_ev(omega_fs: float) -> float:
    """Angular frequency in fs^-1 to energy in eV."""
    return omega_fs * HBAR_EV_FS


def ev_to_nm(energy_ev: float) -> float:
    """Photon energy in eV to vacuum wavelength in nm.

    The map is its own inverse; requires a strictly positive energy.
    """
    if not energy_ev > 0:
        raise ValueError(f"energy must be positive, got {energy_ev}")
    return HC_EV_NM / energy_ev
