"""Self-check registry behind the ``sphzeta selftest`` subcommand.

Every check recomputes one headline result from scratch and compares it
against its published target, so a single run certifies an installation
end to end.  The checks re-derive their inputs rather than importing
frozen constants from the test suite; the two layers fail independently.

All observed values are formatted with a fixed precision so that repeated
runs produce byte-identical reports (modulo the optional timestamp, which
the CLI adds separately).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _figures, bag, mode_oracle, spheroidal, zeta_casimir

# Published targets the checks certify against.
_SPHERE_RESIDUE = 1.0 / (315.0 * math.pi)
_SPHERE_FINITE_PART = -0.00889
_SPHERE_ENERGY_DIRICHLET = 0.00281
_SPHERE_ENERGY_EM = 0.04617
_ZONAL_DOUBLE_POLE = 3.0 / (64.0 * math.pi)
_ZONAL_RESIDUE = -(
    2561.0 - 1890.0 * float(np.euler_gamma) - 5670.0 * math.log(2.0)
) / (40320.0 * math.pi)
_ZONAL_FINITE_PART = -0.03421
_FACTOR_EXACT = 0.25759
_FACTOR_ZONAL = -3.85312

_SHIFT_FIT_MODES = ((0, 0), (1, 0), (1, 1), (2, 0), (2, 2), (5, 3))


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    observed: str
    required: str


def _bounded(name: str, value: float, bound: float) -> CheckResult:
    return CheckResult(name, value <= bound, f"{value:.6g}", f"<= {bound:g}")


def _exceeds(name: str, value: float, bound: float) -> CheckResult:
    return CheckResult(name, value > bound, f"{value:.6g}", f"> {bound:g}")


def _flag(name: str, ok: bool, observed: str, required: str) -> CheckResult:
    return CheckResult(name, bool(ok), observed, required)


@lru_cache(maxsize=None)
def _sphere_laurent():
    return zeta_casimir.sphere_zeta_dirichlet_interior()


@lru_cache(maxsize=None)
def _zonal_laurent():
    return zeta_casimir.zonal_zeta_nlo()


def _check_flat_eigenvalues():
    worst = 0.0
    for l in range(51):
        for m in range(l + 1):
            lam = spheroidal.lambda_eigenvalue(l, m, 0.0)
            worst = max(worst, abs(lam - l * (l + 1)))
    return [_bounded("eigenvalue-flat-limit", worst, 1e-12)]


def _check_angular_approximation():
    worst = max(abs(ratio - 1.0) for _, _, ratio in _figures.fig3_rows())
    return [_bounded("angular-approximation", worst, 0.01)]


def _check_radial_approximation():
    rows = _figures.fig4_rows()
    window = max(abs(r - 1.0) for e, _, r in rows if 0.0 < e < 0.1)
    degraded = max(abs(r - 1.0) for e, _, r in rows if e >= 0.25)
    return [
        _bounded("radial-approximation-window", window, 0.01),
        _exceeds("radial-approximation-degrades", degraded, 0.01),
    ]


def _check_msum_identity():
    bad = [l for l in range(201) if zeta_casimir.msum_identity(l)[0] != zeta_casimir.msum_identity(l)[1]]
    return [
        _flag(
            "shift-m-sum-identity",
            not bad,
            "exact for l <= 200" if not bad else f"fails at l = {bad[0]}",
            "exact rational identity",
        )
    ]


def _check_mode_shift_fits():
    worst = 0.0
    for l, m in _SHIFT_FIT_MODES:
        worst = max(worst, mode_oracle.root_shift_fit(l, m, "dirichlet").abs_err)
    return [_bounded("mode-shift-fits", worst, 1e-3)]


def _check_sphere_laurent():
    lau = _sphere_laurent()
    return [
        _bounded("sphere-zeta-residue", abs(lau.c_m1 - _SPHERE_RESIDUE), 1e-6),
        _bounded("sphere-zeta-finite-part", abs(lau.c_0 - _SPHERE_FINITE_PART), 1e-4),
    ]


def _check_sphere_energies():
    e_d = zeta_casimir.sphere_energy_total("dirichlet").E0
    e_em = zeta_casimir.sphere_energy_total("em").E0
    return [
        _bounded(
            "sphere-energy-dirichlet",
            abs(e_d / _SPHERE_ENERGY_DIRICHLET - 1.0),
            0.02,
        ),
        _bounded("sphere-energy-em", abs(e_em / _SPHERE_ENERGY_EM - 1.0), 0.005),
    ]


def _check_zonal_laurent():
    lau = _zonal_laurent()
    return [
        _bounded("zonal-zeta-double-pole", abs(lau.c_m2 - _ZONAL_DOUBLE_POLE), 1e-5),
        _bounded("zonal-zeta-residue", abs(lau.c_m1 - _ZONAL_RESIDUE), 1e-4),
        _bounded("zonal-zeta-finite-part", abs(lau.c_0 - _ZONAL_FINITE_PART), 3e-4),
    ]


def _check_deformation_factors():
    c2_zonal, c2_exact = zeta_casimir.zonal_vs_exact_factors(
        sphere=_sphere_laurent(), zonal=_zonal_laurent()
    )
    return [
        _bounded("deformation-factor-exact", abs(c2_exact / _FACTOR_EXACT - 1.0), 0.005),
        _bounded("deformation-factor-zonal", abs(c2_zonal / _FACTOR_ZONAL - 1.0), 0.005),
        _flag(
            "deformation-factor-signs",
            c2_exact > 0.0 > c2_zonal,
            f"exact {c2_exact:+.6g}, zonal {c2_zonal:+.6g}",
            "opposite signs",
        ),
    ]


def _check_volume_invariance():
    sphere_e0 = zeta_casimir.sphere_energy_total("dirichlet").E0
    worst = 0.0
    for e in (0.1, 0.2):
        spheroid = zeta_casimir.spheroid_energy(1.0, e, "prolate", "dirichlet")
        radius = zeta_casimir.volume_preserving_radius(1.0, e)
        ratio = spheroid.evaluate(e) / (sphere_e0 / radius)
        worst = max(worst, abs(ratio - 1.0) / e**4)
    return [_bounded("volume-invariance", worst, 0.5)]


def _check_bag_energies():
    grid = [float(e) for e in np.linspace(0.0, 0.3, 31)]
    meson = [bag.meson_prolate_energy(1.0, e) for e in grid]
    baryon = [bag.baryon_oblate_energy(1.0, e) for e in grid]
    monotone = all(b > a for a, b in zip(meson, meson[1:])) and all(
        b > a for a, b in zip(baryon, baryon[1:])
    )
    e = 0.1
    minor = math.sqrt(1.0 - e * e)  # semi-minor axis of the unit-major spheroid
    via_minor = bag.meson_prolate_energy(minor, e)
    via_major = bag.modified_energy() * (1.0 + e * e / 3.0)
    return [
        _flag(
            "bag-energy-monotone",
            monotone,
            "meson and baryon increase" if monotone else "non-monotone",
            "strictly increasing in ellipticity",
        ),
        _bounded("bag-axis-consistency", abs(via_minor - via_major), 1e-4),
    ]


_CHECKS = (
    _check_flat_eigenvalues,
    _check_angular_approximation,
    _check_radial_approximation,
    _check_msum_identity,
    _check_mode_shift_fits,
    _check_sphere_laurent,
    _check_sphere_energies,
    _check_zonal_laurent,
    _check_deformation_factors,
    _check_volume_invariance,
    _check_bag_energies,
)


def run_checks() -> list[CheckResult]:
    """Run every registered check and return the results in a fixed order."""
    results: list[CheckResult] = []
    for check in _CHECKS:
        results.extend(check())
    return results
