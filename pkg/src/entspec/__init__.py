"""Entangled two-photon absorption vs. stimulated Raman scattering simulator."""

from .grids import Grid, read_grid_csv, read_grid_json, write_grid_csv, write_grid_json
from .oracle import (
    QuadratureSpec,
    dawson,
    jsa_norm,
    pv_approx_error_report,
    pv_gaussian_exact,
    pv_quadrature,
)
from .photon_source import (
    Correlation,
    PhotonPairSource,
    correlation_class,
    jsa,
    jsi,
    jsi_grid,
)
from .sweep import (
    AxisSpec,
    FIGURE_NAMES,
    SweepConfig,
    figure_preset,
    make_kernel,
    parse_config,
    run_sweep,
)
from .three_level import (
    DetuningSet,
    ThreeLevelRaman,
    ThreeLevelTPA,
    dipole_ratio,
    omega_all_srs,
    omega_all_tpa,
    p_srs_3lvl,
    p_tpa_3lvl,
    p_tpa_3lvl_form,
    pv_gaussian_approx,
    ratio_3lvl,
    tpa_amplitude,
)
from .vibronic import (
    VibrationalMode,
    VibronicSystem,
    franck_condon,
    lineshape_exact,
    lineshape_high,
    lineshape_low,
    p_srs_vibronic,
    p_tpa_vibronic,
    phi_efeg,
    phi_egeg,
    ratio_vibronic,
)

__version__ = "0.1.0"

__all__ = [
    "AxisSpec",
    "Correlation",
    "DetuningSet",
    "FIGURE_NAMES",
    "Grid",
    "PhotonPairSource",
    "QuadratureSpec",
    "SweepConfig",
    "ThreeLevelRaman",
    "ThreeLevelTPA",
    "VibrationalMode",
    "VibronicSystem",
    "correlation_class",
    "dawson",
    "dipole_ratio",
    "figure_preset",
    "franck_condon",
    "jsa",
    "jsa_norm",
    "jsi",
    "jsi_grid",
    "lineshape_exact",
    "lineshape_high",
    "lineshape_low",
    "make_kernel",
    "omega_all_srs",
    "omega_all_tpa",
    "p_srs_3lvl",
    "p_srs_vibronic",
    "p_tpa_3lvl",
    "p_tpa_3lvl_form",
    "p_tpa_vibronic",
    "parse_config",
    "phi_efeg",
    "phi_egeg",
    "pv_approx_error_report",
    "pv_gaussian_approx",
    "pv_gaussian_exact",
    "pv_quadrature",
    "ratio_3lvl",
    "ratio_vibronic",
    "read_grid_csv",
    "read_grid_json",
    "run_sweep",
    "tpa_amplitude",
    "write_grid_csv",
    "write_grid_json",
]
