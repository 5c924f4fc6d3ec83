import math
from dataclasses import replace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from entspec import (
    PhotonPairSource,
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
from entspec.errors import SingularModelError
from entspec.units import HBAR_EV_FS, ev_to_angular_fs
from entspec.vibronic import delta_tpa, franck_condon_weights

MODE = VibrationalMode(omega_j=0.17, huang_rhys=1.0, low_freq_decay=0.536)


def src_at(omega_sum, omega_diff, sp_fs=0.3, sm_fs=0.05):
    return PhotonPairSource.from_fs_bandwidths(
        0.5 * (omega_sum + omega_diff), 0.5 * (omega_sum - omega_diff), sp_fs, sm_fs
    )


def with_mode(system, **kwargs):
    return replace(system, mode=replace(system.mode, **kwargs))


# -- lineshape pieces -------------------------------------------------------

def test_mode_validation():
    with pytest.raises(ValueError):
        VibrationalMode(0.0, 1.0, 0.5)
    with pytest.raises(ValueError):
        VibrationalMode(0.17, -0.1, 0.5)
    with pytest.raises(ValueError):
        VibrationalMode(0.17, 1.0, -0.5)
    assert VibrationalMode(0.17, 1.0, 0.5).coupling == 1.0
    assert VibrationalMode(0.17, 1.0, 0.5, lam=0.3).coupling == 0.3


def test_lineshape_exact_zero_time():
    assert lineshape_exact(MODE, 0.0, 295.0) == 0.0


def test_lineshape_exact_real_part_nonnegative():
    for t in [0.1 * k for k in range(-80, 81)]:
        assert lineshape_exact(MODE, t, 295.0).real >= 0.0


def test_lineshape_exact_one_period_is_pure_imaginary():
    t = 2.0 * math.pi / ev_to_angular_fs(MODE.omega_j)
    g = lineshape_exact(MODE, t, 295.0)
    assert g.real == pytest.approx(0.0, abs=1e-9)
    assert g.imag == pytest.approx(-2.0 * math.pi, rel=1e-9)


def test_lineshape_low_values():
    assert lineshape_low(MODE, 0.0) == 0.0
    assert lineshape_low(MODE, 1.0) == -0.536
    for t in (0.3, 1.7):
        assert lineshape_low(MODE, 2.0 * t) == 4.0 * lineshape_low(MODE, t)


def test_lineshape_high_values():
    assert lineshape_high(MODE, 0.0) == 0.0
    t_half = math.pi / ev_to_angular_fs(MODE.omega_j)
    g = lineshape_high(MODE, t_half)
    assert g.real == pytest.approx(2.0 * MODE.huang_rhys, rel=1e-12)
    assert g.imag == pytest.approx(0.0, abs=1e-12)


@given(st.floats(min_value=-50, max_value=50))
def test_lineshape_high_bounded(t):
    assert abs(lineshape_high(MODE, t)) <= 2.0 * MODE.huang_rhys + 1e-12


def test_phi_egeg():
    assert phi_egeg(MODE, 0.0) == 0.0
    for u in [0.05 * k for k in range(-100, 101)]:
        assert phi_egeg(MODE, u).real <= 1e-15
    flat = VibrationalMode(0.17, 0.0, 0.536)
    assert phi_egeg(flat, 1.3) == pytest.approx(-0.536 * 1.3**2)


def test_phi_efeg():
    assert phi_efeg(MODE, 0.0) == 0.0
    flat = VibrationalMode(0.17, 0.0, 0.536)
    assert phi_efeg(flat, 2.1) == 0.0
    for dt in [0.1 * k for k in range(-60, 61)]:
        mag = abs(complex(math.e) ** phi_efeg(MODE, dt))
        assert math.exp(-2.0 * MODE.huang_rhys) - 1e-12 <= mag <= 1.0 + 1e-12


# -- vibronic weights -------------------------------------------------------

def test_franck_condon_values():
    assert franck_condon(1.0, 0) == pytest.approx(math.exp(-1.0), rel=1e-14)
    assert franck_condon(0.0, 0) == 1.0
    assert franck_condon(0.0, 3) == 0.0
    with pytest.raises(ValueError):
        franck_condon(-0.5, 0)
    with pytest.raises(ValueError):
        franck_condon(1.0, -1)


@pytest.mark.parametrize("f", [0.1, 1.0, 5.0])
def test_franck_condon_closure(f):
    assert abs(sum(franck_condon_weights(f, 30)) - 1.0) < 1e-12


# -- signals ----------------------------------------------------------------

def test_p_srs_zero_coupling_is_rayleigh_line(pyrene):
    system = with_mode(pyrene, huang_rhys=0.0)
    diffs = [0.01 * k for k in range(-40, 41)]
    vals = [p_srs_vibronic(system, src_at(7.97, d)) for d in diffs]
    assert diffs[vals.index(max(vals))] == pytest.approx(0.0)


def test_p_srs_halves_when_decay_doubles(pyrene):
    hot = with_mode(pyrene, low_freq_decay=2.0 * pyrene.mode.low_freq_decay)
    for d in (0.0, 0.17, 0.3):
        src = src_at(8.14, d)
        assert p_srs_vibronic(hot, src) == p_srs_vibronic(pyrene, src) / 2.0


def test_p_srs_first_side_peak_at_mode_energy(pyrene, src_srs):
    diffs = [0.01 * k for k in range(10, 40)]  # between the Rayleigh and second lines
    vals = [p_srs_vibronic(pyrene, src_at(8.14, d)) for d in diffs]
    assert diffs[vals.index(max(vals))] == pytest.approx(pyrene.mode.omega_j)


def test_p_srs_swap_roles_mirrors_line_spectrum(pyrene):
    src = src_at(8.14, 0.17)
    mirrored = src_at(8.14, -0.17)
    assert p_srs_vibronic(pyrene, mirrored, swap_photon_roles=True) == p_srs_vibronic(
        pyrene, src
    )


def test_p_srs_rejects_zero_decay(pyrene):
    frozen = with_mode(pyrene, low_freq_decay=0.0)
    with pytest.raises(SingularModelError):
        p_srs_vibronic(frozen, src_at(7.97, 0.0))


def test_p_tpa_zero_coupling_gaussian_peak(pyrene):
    system = with_mode(pyrene, huang_rhys=0.0)
    sums = [7.5 + 0.01 * k for k in range(-50, 51)]
    vals = [p_tpa_vibronic(system, src_at(s, -0.3, sp_fs=0.05, sm_fs=0.3)) for s in sums]
    assert sums[vals.index(max(vals))] == pytest.approx(7.5)
    src = src_at(7.5, -0.3, sp_fs=0.05, sm_fs=0.3)
    assert delta_tpa(system, src) == pytest.approx(0.0)
    assert vals[50] == pytest.approx((4.35 * 6.99) ** 2, rel=1e-12)


def test_p_tpa_pyrene_peak(pyrene):
    sums = [7.0 + 0.01 * k for k in range(0, 101)]
    vals = [p_tpa_vibronic(pyrene, src_at(s, -0.3, sp_fs=0.05, sm_fs=0.3)) for s in sums]
    assert sums[vals.index(max(vals))] == pytest.approx(7.5)


def test_p_tpa_adjacent_peaks_separated_by_mode_energy(pyrene):
    sums = [6.8 + 0.005 * k for k in range(0, 281)]
    vals = [p_tpa_vibronic(pyrene, src_at(s, -0.4, sp_fs=0.05, sm_fs=0.3)) for s in sums]
    peaks = [
        sums[k]
        for k in range(1, len(sums) - 1)
        if vals[k] > vals[k - 1] and vals[k] > vals[k + 1]
    ]
    assert len(peaks) >= 2
    gaps = [b - a for a, b in zip(peaks, peaks[1:])]
    for gap in gaps:
        assert gap == pytest.approx(pyrene.mode.omega_j, abs=0.011)


def test_monotone_truncation(pyrene, src_srs, src_tpa):
    prev_srs, prev_tpa = None, None
    for n_max in (5, 10, 20, 30):
        s = p_srs_vibronic(pyrene, src_srs, n_max)
        t = p_tpa_vibronic(pyrene, src_tpa, n_max)
        if prev_srs is not None:
            assert s >= prev_srs
            assert t >= prev_tpa
        prev_srs, prev_tpa = s, t


@settings(deadline=None, max_examples=40)
@given(
    st.floats(min_value=0.0, max_value=5.0),
    st.floats(min_value=-0.6, max_value=0.6),
    st.floats(min_value=7.0, max_value=9.0),
)
def test_truncation_tail_negligible(f, diff, total):
    mode = VibrationalMode(0.17, f, 0.536)
    system = VibronicSystem(3.9, 3.6, 4.07, 3.9, 4.35, 6.99, 4.35, 4.35, mode, 295.0)
    src = src_at(total, diff)
    p30 = p_srs_vibronic(system, src, 30)
    p31 = p_srs_vibronic(system, src, 31)
    assert p31 - p30 <= 1e-10 * p31
    t30 = p_tpa_vibronic(system, src, 30)
    t31 = p_tpa_vibronic(system, src, 31)
    assert t31 - t30 <= 1e-10 * t31


def test_signals_strictly_positive(pyrene, src_tpa, src_srs):
    assert p_tpa_vibronic(pyrene, src_tpa) > 0.0
    assert p_srs_vibronic(pyrene, src_srs) > 0.0
    assert p_tpa_vibronic(pyrene, src_at(9.2, 0.5)) > 0.0


def _scaled(system, src, kappa):
    mode = system.mode
    sys_k = VibronicSystem(
        kappa * system.omega_eg,
        kappa * system.omega_fe,
        kappa * system.omega_eg1,
        kappa * system.omega_eg2,
        system.mu_eg,
        system.mu_fe,
        system.mu_eg1,
        system.mu_eg2,
        VibrationalMode(kappa * mode.omega_j, mode.huang_rhys, mode.low_freq_decay),
        system.temperature,
    )
    src_k = PhotonPairSource(
        kappa * src.omega_s0, kappa * src.omega_i0, kappa * src.sigma_p, kappa * src.sigma_m
    )
    return sys_k, src_k


def test_scale_covariance(pyrene, src_tpa, src_srs):
    # with the decay rate held fixed every Gaussian argument is scale
    # invariant and only the 1/(n omega_j + omega_eg) prefactor survives
    sys2, srs2 = _scaled(pyrene, src_srs, 2.0)
    assert p_srs_vibronic(sys2, srs2) == p_srs_vibronic(pyrene, src_srs) / 2.0
    sys2t, tpa2 = _scaled(pyrene, src_tpa, 2.0)
    assert p_tpa_vibronic(sys2t, tpa2) == p_tpa_vibronic(pyrene, src_tpa)
    sysk, srsk = _scaled(pyrene, src_srs, 1.7)
    assert p_srs_vibronic(sysk, srsk) == pytest.approx(
        p_srs_vibronic(pyrene, src_srs) / 1.7, rel=1e-12
    )
    # scaling the decay rate by kappa^2 on top divides the signal once more
    sysk2 = with_mode(sysk, low_freq_decay=pyrene.mode.low_freq_decay * 1.7**2)
    assert p_srs_vibronic(sysk2, srsk) == pytest.approx(
        p_srs_vibronic(pyrene, src_srs) / 1.7**3, rel=1e-12
    )


def test_ratio_decay_rate_law(pyrene, src_tpa, src_srs):
    lo = with_mode(pyrene, low_freq_decay=3.0)
    hi = with_mode(pyrene, low_freq_decay=300.0)
    r_lo = ratio_vibronic(lo, src_tpa, src_srs)
    r_hi = ratio_vibronic(hi, src_tpa, src_srs)
    assert r_hi / r_lo == pytest.approx(100.0, rel=1e-12)


def test_ratio_temperature_linearity(pyrene, src_tpa, src_srs):
    base = ratio_vibronic(pyrene, src_tpa, src_srs)
    doubled = with_mode(pyrene, low_freq_decay=2.0 * pyrene.mode.low_freq_decay)
    assert ratio_vibronic(doubled, src_tpa, src_srs) == pytest.approx(2.0 * base, rel=1e-9)


def test_ratio_peak_to_peak_scale(pyrene, src_tpa, src_srs):
    # absorption peak against the strongest Raman (Rayleigh) line
    rayleigh = src_at(7.97, 0.0)
    r = p_tpa_vibronic(pyrene, src_tpa) / p_srs_vibronic(pyrene, rayleigh)
    assert 5.60 / 2.0 <= r <= 5.60 * 2.0


def test_ratio_division_guard(pyrene):
    dead = src_at(9.0, -5.0, sp_fs=0.05, sm_fs=0.01)
    with pytest.raises(SingularModelError):
        ratio_vibronic(pyrene, src_at(7.5, -0.3), dead)


def test_system_validation(pyrene):
    with pytest.raises(ValueError):
        replace(pyrene, omega_eg=-1.0)
    with pytest.raises(ValueError):
        replace(pyrene, temperature=0.0)
    with pytest.raises(ValueError):
        p_srs_vibronic(pyrene, src_at(7.97, 0.0), n_max=-1)
