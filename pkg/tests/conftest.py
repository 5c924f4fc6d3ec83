import pytest

from entspec import PhotonPairSource, VibrationalMode, VibronicSystem


@pytest.fixture
def pyrene():
    mode = VibrationalMode(omega_j=0.17, huang_rhys=1.0, low_freq_decay=0.536)
    return VibronicSystem(
        omega_eg=3.9,
        omega_fe=3.6,
        omega_eg1=4.07,
        omega_eg2=3.9,
        mu_eg=4.35,
        mu_fe=6.99,
        mu_eg1=4.35,
        mu_eg2=4.35,
        mode=mode,
        temperature=295.0,
    )


@pytest.fixture
def src_tpa():
    # anti-correlated pairs resonant with the absorption ladder (idler first)
    return PhotonPairSource.from_fs_bandwidths(3.6, 3.9, 0.05, 0.3)


@pytest.fixture
def src_srs():
    # correlated pairs at the first Raman side line
    return PhotonPairSource.from_fs_bandwidths(4.155, 3.985, 0.3, 0.05)
