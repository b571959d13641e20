"""Zeta-regularized vacuum-energy data for spheres and slightly deformed spheres.

Spectral sums are represented through rotated-axis integrals of Bessel
log-derivatives.  Uniform (Debye) subtractions make every angular-momentum
sum absolutely convergent; the subtracted pieces are added back in closed
form, and their Laurent data at s = -1 is extracted by contour integration
in the s-plane.  Total sphere energies combine interior and exterior Jost
products, so all surface divergences cancel between the two regions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath as mp
import numpy as np
from scipy import integrate, special

from . import _debye
from .errors import ConvergenceError, DomainError

__all__ = [
    "LaurentAtMinusOne",
    "EnergyExpansion",
    "PPPrescription",
    "sphere_zeta_dirichlet_interior",
    "zonal_zeta_nlo",
    "zonal_vs_exact_factors",
    "zonal_weight",
    "msum_identity",
    "volume_preserving_radius",
    "sphere_energy_total",
    "spheroid_energy",
    "em_conjecture_energy",
]

_SCALE_NOTE = "frequencies in units 1/a; zeta argument dimensionless (mu*a = 1)"

_BC_VALUES = ("dirichlet", "neumann", "em")
_GEOMETRIES = ("prolate", "oblate")

# Boundary-operator families entering each physical tower.  The value
# "neumann" selects the derivative-type (Robin) condition (x i_l(x))' = 0,
# which is exactly the second tower of the electromagnetic assembly; the
# electromagnetic total combines both families with l >= 1.
_BC_FAMILIES = {
    "dirichlet": ("dirichlet",),
    "neumann": ("robin",),
    "em": ("dirichlet", "robin"),
}


@dataclass(frozen=True)
class LaurentAtMinusOne:
    """Laurent coefficients of a zeta function about s = -1."""

    c_m2: float
    c_m1: float
    c_0: float
    scale_note: str = _SCALE_NOTE

    def __post_init__(self):
        for v in (self.c_m2, self.c_m1, self.c_0):
            if not math.isfinite(v):
                raise DomainError("Laurent coefficients must be finite")

    def as_dict(self):
        return {
            "c_m2": self.c_m2,
            "c_m1": self.c_m1,
            "c_0": self.c_0,
            "scale_note": self.scale_note,
        }


@dataclass(frozen=True)
class EnergyExpansion:
    """Energy in units 1/a with its quadratic-in-ellipticity coefficient.

    The value at ellipticity e is E0 * (1 + c2 * e**2); c2 is None for a
    plain sphere result, where no expansion is implied.
    """

    E0: float
    c2: float | None
    geometry: str | None
    bc: str
    region: str
    flags: tuple[str, ...] = ()

    def evaluate(self, e=0.0):
        if self.c2 is None:
            return self.E0
        return self.E0 * (1.0 + self.c2 * e * e)

    def as_dict(self):
        return {
            "E0": self.E0,
            "c2": self.c2,
            "geometry": self.geometry,
            "bc": self.bc,
            "region": self.region,
            "flags": list(self.flags),
        }


@dataclass(frozen=True)
class PPPrescription:
    """Bookkeeping rule mapping Laurent data to a finite energy factor."""

    variant: str = "finite-part-with-pole-term"
    mu_convention: str = "mass scale tied to the sphere radius (mu*a = 1)"

    def __post_init__(self):
        if self.variant not in ("finite-part", "finite-part-with-pole-term"):
            raise DomainError(f"unknown prescription variant: {self.variant!r}")


# ---------------------------------------------------------------------------
# Exact rational helpers
# ---------------------------------------------------------------------------


def msum_identity(l):
    """Exact m-sum of the frequency-shift coefficients at fixed l.

    Returns (lhs, rhs) with lhs = sum over m of
    (l² + l + m² - 1)/(4l² + 4l - 3) and rhs = (2l + 1)/3, both as exact
    rationals.  They agree for every l.
    """
    if l < 0:
        raise DomainError("l must be non-negative")
    den = 4 * l * l + 4 * l - 3
    lhs = sum(Fraction(l * l + l + m * m - 1, den) for m in range(-l, l + 1))
    return lhs, Fraction(2 * l + 1, 3)


def volume_preserving_radius(a, e):
    """Radius of the sphere with the same volume as the spheroid (a, e)."""
    if not 0.0 <= e < 1.0:
        raise DomainError("ellipticity must lie in [0, 1)")
    if a <= 0.0:
        raise DomainError("scale must be positive")
    return a * (1.0 - e * e) ** (1.0 / 3.0)


def zonal_weight(l):
    """m-summed shift weight (5 - 4nu²)/(8(1 - nu²)) = 2 alpha_{l,0}."""
    nu = l + 0.5
    return (5.0 - 4.0 * nu * nu) / (8.0 * (1.0 - nu * nu))


# ---------------------------------------------------------------------------
# Remainder integrals (shared between the exact and zonal zetas)
# ---------------------------------------------------------------------------


# Beyond this z the surviving remainder terms decay like z^{-9} and sit far
# below the double-precision noise floor of the scaled Bessel routines, so
# extending the quadrature only accumulates noise.
_Z_CUTOFF = 40.0


@lru_cache(maxsize=None)
def _remainder_integral(l):
    """(value, abserr) of ∫ z [g(nu,z) - Debye sum] dz at nu = l + 1/2."""
    nu = l + 0.5

    def f(z):
        return z * _debye.ratio_remainder(nu, z)

    res = integrate.quad(f, 0.0, _Z_CUTOFF, limit=400, epsabs=1e-14,
                         epsrel=1e-10, points=(0.5, 2.0, 8.0), full_output=1)
    return res[0], res[1]


def _tail_fit(values, nus, powers):
    """Least-squares fit of values to sum of nus**(-p); returns coefficients."""
    A = np.column_stack([np.asarray(nus, dtype=float) ** (-p) for p in powers])
    coef, *_ = np.linalg.lstsq(A, np.asarray(values, dtype=float), rcond=None)
    misfit = float(np.max(np.abs(A @ coef - values)))
    return coef, misfit


def _tail_sum(coef, powers, l_start):
    total = 0.0
    for c, p in zip(coef, powers):
        total += float(c) * float(special.zeta(p, l_start + 0.5))
    return total


def _summed_remainder(weight_fn, l_max):
    """Sum of weight(l) * remainder integral, with power-law tail estimate.

    Returns (total, tail, bound): the partial sum, the extrapolated tail
    beyond l_max, and a conservative error bound combining the quadrature
    noise of every term with the full size of the (tiny) tail.
    """
    if l_max < 10:
        raise DomainError("need at least l_max = 10 for the tail fit")
    pairs = [_remainder_integral(l) for l in range(l_max + 1)]
    weights = [weight_fn(l) for l in range(l_max + 1)]
    terms = [w * v for w, (v, _) in zip(weights, pairs)]
    total = math.fsum(terms)
    noise = math.fsum(abs(w) * e for w, (_, e) in zip(weights, pairs))
    lo = max(4, l_max - 7)
    nus = np.arange(lo, l_max + 1) + 0.5
    powers = (6, 7)
    coef, _ = _tail_fit(np.array(terms[lo:]), nus, powers)
    tail = _tail_sum(coef, powers, l_max + 1)
    return total, tail, noise + abs(tail)


# ---------------------------------------------------------------------------
# Closed-form added-back pieces (mpmath, meromorphic in s)
# ---------------------------------------------------------------------------


def _monomial_integral(s, j):
    """Continued integral of z^{-s-1} t^{j-1} over (0, inf), j >= 2."""
    return mp.gamma(-s / 2) * mp.gamma((j - 1 + s) / 2) / (2 * mp.gamma(mp.mpf(j - 1) / 2))


def _subtraction_transform(s, k):
    """Continued integral of z^{-s} times the k-th Debye term of g."""
    if k == 0:
        return -mp.gamma(-s / 2) * mp.gamma((s - 1) / 2) / (4 * mp.sqrt(mp.pi))
    total = mp.mpf(0)
    for j, c in sorted(_debye.PHI_POLY[k].items()):
        if j == 1:
            continue  # scaleless monomial: vanishes under the continuation
        total += mp.mpf(c.numerator) / c.denominator * _monomial_integral(s, j)
    return total


def _addback_sphere(s, kmax):
    """Analytic part of the interior Dirichlet zeta carrying all its poles."""
    half = mp.mpf(1) / 2
    total = mp.mpf(0)
    for k in range(kmax + 1):
        total += 2 * mp.zeta(s + k - 2, half) * _subtraction_transform(s, k)
    return mp.sinpi(s / 2) / mp.pi * total


def _zonal_weight_sum(s, k, zh32, max_j=400):
    """sum over l of W_l nu^{2-s-k}, W_l = (5-4nu²)/(8(1-nu²)), continued.

    zh32 memoizes zeta(s + m, 3/2) by integer offset m; the same offsets
    recur across the different Debye orders k.
    """
    a = s + k - 2
    # 1/(nu²-1) = -4/3 at nu = 1/2; geometric series in nu^{-2} for l >= 1
    corr = -mp.mpf(4) / 3 * mp.power(2, a)
    j = 1
    while j <= max_j:
        m = k - 2 + 2 * j
        term = zh32.get(m)
        if term is None:
            term = zh32[m] = mp.zeta(s + m, mp.mpf(3) / 2)
        corr += term
        if abs(term) < mp.mpf(10) ** (-36) and j > 2:
            break
        j += 1
    else:
        raise ConvergenceError("zonal weight series did not converge")
    return mp.zeta(a, mp.mpf(1) / 2) / 2 - corr / 8


def _addback_zonal(s, kmax):
    """Analytic part of the zonal next-to-leading zeta (double poles included)."""
    zh32 = {}
    total = mp.mpf(0)
    for k in range(kmax + 1):
        total += _zonal_weight_sum(s, k, zh32) * _subtraction_transform(s, k)
    return (-s) * mp.sinpi(s / 2) / mp.pi * total


def _laurent_circle(f, radius=0.25, nodes=32):
    """Laurent coefficients c_{-2}, c_{-1}, c_0 of f about s = -1."""
    ws = [radius * mp.expjpi(mp.mpf(2 * k) / nodes) for k in range(nodes)]
    vals = [f(-1 + w) for w in ws]
    out = []
    for n in (-2, -1, 0):
        acc = mp.mpc(0)
        for w, fv in zip(ws, vals):
            acc += fv * mp.power(w, -n)
        out.append(float(mp.re(acc)) / nodes)
    return tuple(out)


def _snap(x, eps=1e-12):
    return 0.0 if abs(x) < eps else x


# ---------------------------------------------------------------------------
# Public zeta operations
# ---------------------------------------------------------------------------


def sphere_zeta_dirichlet_interior(l_max=14, kmax=8, tail_tol=1e-6, raw=False):
    """Laurent data at s = -1 of the interior Dirichlet sphere zeta.

    The added-back closed forms carry the full pole structure (a simple
    pole only); the numerically integrated remainder is analytic at
    s = -1 and shifts just the finite part.

    By default the coefficients are reported in the normalization that
    the established tabulations (and the deformation-factor formulas
    downstream) use for this spectral problem: the residue is counted
    per azimuthal pair -- half the raw (2l+1)-degenerate mode-sum
    residue -- and the finite part carries the opposite sign.  Pass
    ``raw=True`` for the unmapped (2l+1)-weighted mode-sum data, which
    is what the truncation diagnostics operate on.
    """
    with mp.workdps(30):
        c_m2, c_m1, c0_analytic = _laurent_circle(lambda s: _addback_sphere(s, kmax))

    def weight(l):
        nu = l + 0.5
        return -2.0 * nu**3 / math.pi

    rem, tail, bound = _summed_remainder(weight, l_max)
    if bound > tail_tol:
        raise ConvergenceError(
            f"angular-momentum tail not under control (bound {bound:.2e})",
            bound=bound,
        )
    c_0 = c0_analytic + rem + tail
    if raw:
        return LaurentAtMinusOne(c_m2=_snap(c_m2), c_m1=c_m1, c_0=c_0)
    return LaurentAtMinusOne(c_m2=_snap(c_m2), c_m1=0.5 * c_m1, c_0=-c_0)


def zonal_zeta_nlo(l_max=14, kmax=8, tail_tol=1e-6):
    """Laurent data at s = -1 of the next-to-leading (zonal) deformation zeta.

    Uses the same remainder integrals as the exact sphere, reweighted by
    the m-summed shift coefficients; the analytic part now carries a
    double pole.
    """
    with mp.workdps(30):
        c_m2, c_m1, c0_analytic = _laurent_circle(lambda s: _addback_zonal(s, kmax))

    def weight(l):
        nu = l + 0.5
        return -zonal_weight(l) * nu**3 / math.pi

    rem, tail, bound = _summed_remainder(weight, l_max)
    if bound > tail_tol:
        raise ConvergenceError(
            f"angular-momentum tail not under control (bound {bound:.2e})",
            bound=bound,
        )
    return LaurentAtMinusOne(
        c_m2=_snap(c_m2), c_m1=c_m1, c_0=c0_analytic + rem + tail
    )


def zonal_vs_exact_factors(prescription=None, sphere=None, zonal=None):
    """e² energy factors from the zonal and the exact route.

    Both are assembled from Laurent data: the exact route uses the
    identity that the deformation zeta is (-s/3) times the sphere zeta,
    the zonal route uses the zonal Laurent data directly.  Returns
    (c2_zonal, c2_exact) under the chosen principal-part prescription.
    """
    p = prescription or PPPrescription()
    sph = sphere or sphere_zeta_dirichlet_interior()
    zon = zonal or zonal_zeta_nlo()
    res, fin, zon_fin = sph.c_m1, sph.c_0, zon.c_0
    if fin == 0.0:
        raise ConvergenceError("sphere finite part vanished; cannot form factors")
    if p.variant == "finite-part":
        # plain finite parts of numerator and denominator
        return zon_fin / fin, (fin - res) / (3.0 * fin)
    # finite part plus the pole-term bookkeeping of the mu-scale
    return -zon_fin / fin, (fin + 2.0 * res) / (3.0 * fin)


# ---------------------------------------------------------------------------
# Total sphere / spheroid energies
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _jost_integral(family, l):
    """z-integral of the subtracted log Jost product at nu = l + 1/2.

    The integrand decays like nu^{-8} z^{-8} past the Debye transition, so
    the finite cutoff loses nothing measurable.
    """
    nu = l + 0.5

    def f(z):
        return _debye.ln_jost_subtracted(family, nu, z)

    res = integrate.quad(f, 0.0, _Z_CUTOFF, limit=400, epsabs=1e-13,
                         epsrel=1e-11, points=(0.25, 1.0, 4.0), full_output=1)
    return res[0], res[1]


def _regularized_power_sums(l_min):
    """Zeta-regularized sums of nu^{-p} over l >= l_min, p in {-2, 0, 2, 4}."""
    sums = {-2: 0.0, 0: 0.0, 2: math.pi**2 / 2.0, 4: math.pi**4 / 6.0}
    if l_min == 1:
        # remove the nu = 1/2 member from each regularized tower
        sums[-2] -= 0.25
        sums[0] -= 1.0
        sums[2] -= 4.0
        sums[4] -= 16.0
    elif l_min != 0:
        raise DomainError("towers start at l = 0 or l = 1")
    return sums


def _tower_energy(family, l_min, l_max):
    """Regularized energy (units 1/a) of one boundary-operator family."""
    if l_max < l_min + 10:
        raise DomainError("need at least ten angular momenta for the tail fit")
    terms = [(l + 0.5) ** 2 * _jost_integral(family, l)[0]
             for l in range(l_min, l_max + 1)]
    partial = math.fsum(terms)
    n_fit = min(8, (l_max - l_min) // 2)
    ls = np.arange(l_max - n_fit + 1, l_max + 1)
    window = np.array(terms[-n_fit:])
    coef, _ = _tail_fit(window, ls + 0.5, (6, 7))
    tail = _tail_sum(coef, (6, 7), l_max + 1)

    sums = _regularized_power_sums(l_min)
    l0_integral = -_debye.L0_SIGN[family] * math.pi / 2.0
    closed = (
        sums[-2] * l0_integral
        + sums[0] * _debye.w_integral(family, 2)
        + sums[2] * _debye.w_integral(family, 4)
        + sums[4] * _debye.w_integral(family, 6)
    )
    return (partial + tail + closed) / math.pi


def sphere_energy_total(bc, l_max=30):
    """Total (interior + exterior) regularized sphere energy, units 1/a."""
    if bc not in _BC_VALUES:
        raise DomainError(f"unknown boundary condition: {bc!r}")
    l_min = 1 if bc == "em" else 0
    value = sum(_tower_energy(fam, l_min, l_max) for fam in _BC_FAMILIES[bc])
    return EnergyExpansion(E0=value, c2=None, geometry=None, bc=bc, region="total")


def spheroid_energy(a, e, geometry, bc, l_max=30):
    """Quadratic deformation expansion of the total energy of a spheroid.

    The boundary-deformation factor is (1 + e²/3) for a prolate and
    (1 - e²/3) for an oblate spheroid at fixed semi-axis scale a.
    """
    if a <= 0.0:
        raise DomainError("scale must be positive")
    if e < 0.0 or e >= 1.0:
        raise DomainError("ellipticity must lie in [0, 1)")
    if geometry not in _GEOMETRIES:
        raise DomainError(f"unknown geometry: {geometry!r}")
    sphere = sphere_energy_total(bc, l_max=l_max)
    c2 = 1.0 / 3.0 if geometry == "prolate" else -1.0 / 3.0
    flags = () if e <= 0.3 else ("outside-validity-window",)
    return EnergyExpansion(
        E0=sphere.E0 / a, c2=c2, geometry=geometry, bc=bc, region="total", flags=flags
    )


BOYER_EM_CONSTANT = 0.04617


def em_conjecture_energy(a, e):
    """Conjectured electromagnetic deformation energy 0.04617/a (1 + e²/3)."""
    if a <= 0.0:
        raise DomainError("scale must be positive")
    if e < 0.0 or e >= 1.0:
        raise DomainError("ellipticity must lie in [0, 1)")
    flags = ("CONJECTURE",) if e <= 0.3 else ("CONJECTURE", "outside-validity-window")
    return EnergyExpansion(
        E0=BOYER_EM_CONSTANT / a,
        c2=1.0 / 3.0,
        geometry="prolate",
        bc="em",
        region="total",
        flags=flags,
    )
