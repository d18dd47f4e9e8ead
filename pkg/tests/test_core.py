import numpy as np
import pytest
import scipy.constants as sc
from hypothesis import given
from hypothesis import strategies as st

from rydkit import (
    CODATA,
    DomainError,
    Frequency,
    blackbody_depopulation_rate,
    free_electron_polarizability,
    magnetic_trap_field,
    rydberg_lifetime,
)
from rydkit.units import TWO_PI


class TestConstants:
    def test_atomic_time_identity(self):
        assert CODATA.atomic_time == CODATA.hbar / CODATA.hartree

    @pytest.mark.parametrize(
        "ours, standard",
        [
            (CODATA.k_b, sc.k),
            (CODATA.hbar, sc.hbar),
            (CODATA.hartree, sc.physical_constants["Hartree energy"][0]),
            (CODATA.atomic_time, sc.physical_constants["atomic unit of time"][0]),
            (CODATA.mu_b, sc.physical_constants["Bohr magneton"][0]),
            (CODATA.c, sc.c),
            (CODATA.e, sc.e),
            (CODATA.m_e, sc.m_e),
            (CODATA.alpha_fs, sc.alpha),
            (
                CODATA.polarizability_au,
                sc.physical_constants["atomic unit of electric polarizability"][0],
            ),
        ],
    )
    def test_codata_agreement(self, ours, standard):
        assert ours == pytest.approx(standard, rel=1e-6)


class TestRydbergLifetime:
    def test_zero_temperature_is_radiative(self):
        # BBR term vanishes: exactly tau0 n^3
        assert rydberg_lifetime(100, 0.0, 3.3e-9) == 3.3e-9 * 100**3
        assert rydberg_lifetime(100, 0.0, 3.3e-9) == pytest.approx(3.3e-3, rel=1e-12)

    def test_room_temperature_value_against_independent_arithmetic(self):
        # oracle: atomic-unit blackbody rate 4 a^3 (k_B T / E_H) / (3 n^2),
        # converted to SI via the atomic unit of time, all from scipy.constants
        n, temp, tau0 = 100, 300.0, 3.3e-9
        hartree = sc.physical_constants["Hartree energy"][0]
        t_au = sc.physical_constants["atomic unit of time"][0]
        rate_au = 4 * sc.alpha**3 * (sc.k * temp / hartree) / (3 * n**2)
        expected = 1.0 / (1.0 / (tau0 * n**3) + rate_au / t_au)
        assert rydberg_lifetime(n, temp, tau0) == pytest.approx(expected, rel=1e-6)
        assert rydberg_lifetime(n, temp, tau0) == pytest.approx(4.277e-4, rel=1e-3)

    def test_temperature_ordering(self):
        t300 = rydberg_lifetime(100, 300.0, 3.3e-9)
        t77 = rydberg_lifetime(100, 77.0, 3.3e-9)
        t4 = rydberg_lifetime(100, 4.0, 3.3e-9)
        assert t300 < t77 < t4

    def test_monotonic_grid(self):
        ns = np.arange(30, 151, 10)
        for temp in (4.0, 77.0, 300.0):
            taus = [rydberg_lifetime(n, temp, 3.3e-9) for n in ns]
            assert all(a < b for a, b in zip(taus, taus[1:]))
        for n in ns:
            assert (
                rydberg_lifetime(n, 300.0, 3.3e-9)
                < rydberg_lifetime(n, 77.0, 3.3e-9)
                < rydberg_lifetime(n, 4.0, 3.3e-9)
            )

    def test_custom_bbr_rate_override(self):
        assert rydberg_lifetime(100, 300.0, 3.3e-9, bbr_rate=lambda n, t: 0.0) == (
            pytest.approx(rydberg_lifetime(100, 0.0, 3.3e-9), rel=1e-15)
        )

    @pytest.mark.parametrize(
        "args", [(5, 300.0, 3.3e-9), (100, -1.0, 3.3e-9), (100, 300.0, 0.0),
                 (float("nan"), 300.0, 3.3e-9), (100, float("inf"), 3.3e-9)]
    )
    def test_rejects_out_of_range(self, args):
        with pytest.raises(DomainError):
            rydberg_lifetime(*args)

    def test_bbr_rate_value(self):
        assert blackbody_depopulation_rate(100, 300.0) == pytest.approx(2035.0, rel=1e-3)


class TestFreeElectronPolarizability:
    def test_1064_nm_against_independent_arithmetic(self):
        omega = TWO_PI * sc.c / 1064e-9
        pol_au = sc.physical_constants["atomic unit of electric polarizability"][0]
        expected = -sc.e**2 / (sc.m_e * omega**2) / pol_au
        got = free_electron_polarizability(Frequency.from_hz(sc.c / 1064e-9))
        assert got == pytest.approx(expected, rel=1e-6)
        assert got == pytest.approx(-545.3, rel=1e-3)

    def test_inverse_square_law(self):
        w = TWO_PI * 2.8e14
        assert free_electron_polarizability(2 * w) == pytest.approx(
            free_electron_polarizability(w) / 4, rel=1e-15
        )

    @given(st.floats(min_value=1e9, max_value=1e18))
    def test_always_negative(self, w):
        assert free_electron_polarizability(w) < 0

    def test_product_with_omega_squared_constant(self):
        ws = np.geomspace(1e13, 1e17, 33)
        products = [free_electron_polarizability(w) * w * w for w in ws]
        spread = (max(products) - min(products)) / abs(products[0])
        assert spread < 1e-12

    def test_zero_frequency_singular(self):
        with pytest.raises(DomainError):
            free_electron_polarizability(0.0)


class TestMagneticTrapField:
    def test_4k_depth_needs_about_6_tesla(self):
        field = magnetic_trap_field(4.0, CODATA.mu_b)
        assert 5.8 <= field <= 6.1
        assert field == pytest.approx(5.9549, rel=1e-4)

    def test_10mk_depth_needs_about_15_millitesla(self):
        field = magnetic_trap_field(0.010, CODATA.mu_b)
        assert 14.5e-3 <= field <= 15.2e-3

    def test_linear_in_inverse_moment(self):
        assert magnetic_trap_field(0.010, 2 * CODATA.mu_b) == pytest.approx(
            magnetic_trap_field(0.010, CODATA.mu_b) / 2, rel=1e-15
        )

    @pytest.mark.parametrize("args", [(0.0, 1e-23), (4.0, 0.0), (-1.0, 1e-23)])
    def test_rejects_nonpositive(self, args):
        with pytest.raises(DomainError):
            magnetic_trap_field(*args)
