"""Tests for the brute-force frequency oracle."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sphzeta import mode_oracle as mo
from sphzeta import specfun as sf
from sphzeta import spheroidal as sph
from sphzeta.errors import BracketError, ConvergenceError, DomainError


@pytest.fixture(scope="module")
def fit_00_dirichlet():
    return mo.root_shift_fit(0, 0, "dirichlet")


@pytest.fixture(scope="module")
def fit_11_neumann():
    return mo.root_shift_fit(1, 1, "neumann")


# --- single roots ---------------------------------------------------------


def test_lowest_dirichlet_root_approaches_bessel_root():
    root = mo.spheroidal_root(0, 0, 1, 1e-3, "dirichlet")
    assert root.z == pytest.approx(math.pi, abs=5e-6)
    assert root.z > math.pi  # prolate stretch pushes the frequency up
    assert root.solver_residual <= 1e-10


def test_lowest_dirichlet_root_at_e005():
    root = mo.spheroidal_root(0, 0, 1, 0.05, "dirichlet")
    assert root.z == pytest.approx(3.14421, abs=2e-4)


def test_l1_m1_dirichlet_shift_coefficient_from_single_root():
    e = 0.05
    z0 = sf.bessel_root(1, 1)
    root = mo.spheroidal_root(1, 1, 1, e, "dirichlet")
    c_meas = (root.z / z0 - 1.0) / e**2
    assert c_meas == pytest.approx(0.4, abs=2e-3)


def test_roots_strictly_increasing_in_n():
    for bc in ("dirichlet", "neumann"):
        zs = [mo.spheroidal_root(1, 0, n, 0.05, bc).z for n in range(1, 5)]
        assert all(b > a for a, b in zip(zs, zs[1:]))


def test_interlacing_with_spherical_roots():
    # |z(e) - z0| <= 2 alpha z0 e^2 for e <= 0.05
    e = 0.05
    for l, m, n in [(0, 0, 1), (1, 1, 1), (2, 0, 2), (3, 2, 1)]:
        z0 = sf.bessel_root(l, n)
        alpha = sph.radial_shift_alpha(l, m)
        z = mo.spheroidal_root(l, m, n, e, "dirichlet").z
        assert abs(z - z0) <= 2.0 * alpha * z0 * e**2


def test_neumann_root_within_its_own_predicted_window():
    e = 0.05
    for l, m in [(1, 0), (2, 2)]:
        z0 = sf.bessel_root(l, 1, kind="derivative")
        c = mo.shift_coefficient(l, m, "neumann")
        z = mo.spheroidal_root(l, m, 1, e, "neumann").z
        assert abs(z - z0) <= 2.0 * abs(c) * z0 * e**2 + 1e-5 * z0


def test_roots_m_sign_symmetric():
    for bc in ("dirichlet", "neumann"):
        plus = mo.spheroidal_root(2, 1, 1, 0.04, bc)
        minus = mo.spheroidal_root(2, -1, 1, 0.04, bc)
        assert minus.z == plus.z
        assert minus.m == 1  # canonicalized


def test_root_input_validation():
    with pytest.raises(DomainError):
        mo.spheroidal_root(0, 0, 1, 0.0, "dirichlet")
    with pytest.raises(DomainError):
        mo.spheroidal_root(0, 0, 1, 0.5, "dirichlet")
    with pytest.raises(DomainError):
        mo.spheroidal_root(0, 0, 0, 0.05, "dirichlet")
    with pytest.raises(DomainError):
        mo.spheroidal_root(0, 0, 1, 0.05, "robin")


def test_bracket_loss_reported_with_interval(monkeypatch):
    # Steer the seed far from any actual root: the secant lands outside the
    # perturbative window and the fallback bracket holds no sign change.
    monkeypatch.setattr(mo.specfun, "bessel_root", lambda *a, **k: 2.0)
    with pytest.raises(BracketError) as info:
        mo.spheroidal_root(0, 0, 1, 0.05, "dirichlet")
    lo, hi = info.value.interval
    assert lo < hi


def test_unreachable_residual_tolerance_raises(monkeypatch):
    monkeypatch.setattr(mo, "_RESIDUAL_TOL", 0.0)
    with pytest.raises(ConvergenceError) as info:
        mo.spheroidal_root(0, 0, 1, 0.05, "dirichlet")
    assert info.value.bound > 0.0


# --- predicted coefficients -----------------------------------------------


def test_dirichlet_prediction_is_alpha():
    assert mo.shift_coefficient(0, 0, "dirichlet") == pytest.approx(1.0 / 3.0)
    assert mo.shift_coefficient(2, 0, "dirichlet") == pytest.approx(5.0 / 21.0)
    assert mo.shift_coefficient(1, 1, "dirichlet") == pytest.approx(2.0 / 5.0)


def test_neumann_prediction_closed_form():
    # c = alpha - 2 beta / (u0^2 - l(l+1)) against an independent assembly
    for l, m, n in [(0, 0, 1), (1, 0, 1), (1, 1, 1), (2, 1, 1), (1, 0, 2)]:
        u0 = sf.bessel_root(l, n, kind="derivative")
        alpha = sph.radial_shift_alpha(l, m)
        beta = (l * l + l - 3.0 * m * m) / (8.0 * l * l + 8.0 * l - 6.0)
        want = alpha - 2.0 * beta / (u0 * u0 - l * (l + 1))
        assert mo.shift_coefficient(l, m, "neumann", n) == pytest.approx(want, rel=1e-14)


def test_neumann_prediction_special_points():
    # beta vanishes when l^2 + l = 3 m^2, leaving exactly 1/3.
    assert mo.shift_coefficient(0, 0, "neumann") == pytest.approx(1.0 / 3.0, abs=1e-15)
    assert mo.shift_coefficient(3, 2, "neumann") == pytest.approx(1.0 / 3.0, abs=1e-15)


@given(
    l=st.integers(min_value=0, max_value=8),
    data=st.data(),
    bc=st.sampled_from(["dirichlet", "neumann"]),
)
@settings(max_examples=40, deadline=None)
def test_prediction_even_in_m(l, data, bc):
    m = data.draw(st.integers(min_value=0, max_value=l))
    assert mo.shift_coefficient(l, m, bc) == mo.shift_coefficient(l, -m, bc)


@pytest.mark.parametrize("bc", ["dirichlet", "neumann"])
@pytest.mark.parametrize("l", [1, 2, 3, 5])
def test_m_averaged_prediction_is_one_third(bc, l):
    total = sum(mo.shift_coefficient(l, m, bc) for m in range(-l, l + 1))
    assert total / (2 * l + 1) == pytest.approx(1.0 / 3.0, abs=1e-12)


# --- fits -----------------------------------------------------------------


def test_fit_00_dirichlet_matches_prediction(fit_00_dirichlet):
    fit = fit_00_dirichlet
    assert fit.c_pred == pytest.approx(1.0 / 3.0)
    assert fit.c_fit == pytest.approx(1.0 / 3.0, abs=1e-3)
    assert fit.abs_err <= 1e-4
    assert fit.z0 == pytest.approx(math.pi, abs=1e-12)


def test_fit_11_neumann_matches_prediction(fit_11_neumann):
    fit = fit_11_neumann
    assert fit.abs_err <= 1e-4
    assert math.isfinite(fit.d_fit)
    assert abs(fit.d_fit) <= 1.5


def test_fit_more_modes_match_prediction():
    for l, m, bc in [(2, 0, "dirichlet"), (2, 1, "neumann")]:
        fit = mo.root_shift_fit(l, m, bc)
        assert fit.abs_err <= 1e-4


def test_quartic_term_stable_under_sample_change(fit_00_dirichlet):
    other = mo.root_shift_fit(0, 0, "dirichlet", e_samples=(0.03, 0.05, 0.07, 0.09))
    assert other.d_fit == pytest.approx(fit_00_dirichlet.d_fit, abs=0.3)
    assert other.c_fit == pytest.approx(fit_00_dirichlet.c_fit, abs=5e-4)


def test_fit_input_validation():
    with pytest.raises(DomainError):
        mo.root_shift_fit(0, 0, "dirichlet", e_samples=(0.02, 0.04))
    with pytest.raises(DomainError):
        mo.root_shift_fit(0, 0, "dirichlet", e_samples=(0.05, 0.1, 0.2))
    with pytest.raises(DomainError):
        mo.root_shift_fit(0, 0, "dirichlet", e_samples=(0.02, 0.02, 0.02))


def test_shift_fit_row_columns(fit_00_dirichlet):
    row = mo.shift_fit_row(fit_00_dirichlet)
    assert tuple(row) == mo.SHIFT_CSV_COLUMNS
    assert row["abs_err"] == pytest.approx(abs(row["c_fit"] - row["c_pred"]))


# --- finite mode-sum check ------------------------------------------------


def test_energy_difference_check_vanishes_at_sphere():
    assert mo.energy_difference_check("dirichlet", 3, 3, 0.0) == (0.0, 0.0)


def test_energy_difference_check_dirichlet_truncated_sum():
    residual, bound = mo.energy_difference_check("dirichlet", 5, 5, 0.05)
    assert abs(residual) <= 1e-5
    assert abs(residual) <= bound


def test_energy_difference_check_scales_as_e4():
    r_hi, _ = mo.energy_difference_check("dirichlet", 3, 3, 0.05)
    r_lo, _ = mo.energy_difference_check("dirichlet", 3, 3, 0.025)
    ratio = r_hi / r_lo
    assert 16.0 * 0.7 <= ratio <= 16.0 * 1.3


def test_energy_difference_check_neumann_within_bound():
    residual, bound = mo.energy_difference_check("neumann", 2, 2, 0.05)
    assert abs(residual) <= bound
