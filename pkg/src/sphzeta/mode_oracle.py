"""Brute-force frequency oracle for the spheroidal cavity.

Everything downstream of the eigenvalue machinery leans on one small law:
stretching a sphere into a slightly prolate spheroid moves each cavity
frequency as z ~ z0 (1 + c e^2).  This module checks that law the hard way
-- root-finding directly on the boundary condition, with no expansion in
the loop -- and reports fitted against predicted shift coefficients.

The solver treats +m and -m alike.  The physical spectrum depends only on
m^2, and the predicted coefficients below are even in m; the radial
function as implemented is the regular solution only for m >= 0, so both
boundary conditions canonicalize m -> |m| before solving.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import optimize

from . import specfun, spheroidal
from .errors import BracketError, ConvergenceError, DomainError

__all__ = [
    "DEFAULT_E_SAMPLES",
    "SHIFT_CSV_COLUMNS",
    "FrequencyRoot",
    "ShiftFit",
    "boundary_condition_value",
    "shift_coefficient",
    "spheroidal_root",
    "root_shift_fit",
    "shift_fit_row",
    "energy_difference_check",
]

_BCS = ("dirichlet", "neumann")

DEFAULT_E_SAMPLES = (0.02, 0.04, 0.06, 0.08)

SHIFT_CSV_COLUMNS = ("l", "m", "bc", "z0", "c_pred", "c_fit", "abs_err")

_Z_TOL = 1e-12
_RESIDUAL_TOL = 1e-10

# Loose envelope for the quartic coefficient d in z = z0(1 + c e^2 + d e^4):
# fitted values across l <= 5, n <= 3 and both boundary conditions stay
# below 0.67, so 1.5 bounds the next order with a factor-two margin.
_QUARTIC_ENVELOPE = 1.5


def _validate_bc(bc: str) -> str:
    if bc not in _BCS:
        raise DomainError(f"bc must be one of {_BCS}, got {bc!r}")
    return bc


def _bessel_kind(bc: str) -> str:
    return "value" if bc == "dirichlet" else "derivative"


@dataclass(frozen=True)
class FrequencyRoot:
    """One cavity eigenfrequency found from the exact boundary condition."""

    l: int
    m: int
    n: int
    e: float
    bc: str
    z: float
    solver_residual: float


@dataclass(frozen=True)
class ShiftFit:
    """Fitted versus predicted e^2 shift coefficient for one mode family.

    ``c_fit`` and ``d_fit`` come from a least-squares fit of
    z(e) = z0 (1 + c e^2 + d e^4) over ``e_samples``; ``c_pred`` is the
    closed-form coefficient from :func:`shift_coefficient`.
    """

    l: int
    m: int
    bc: str
    z0: float
    c_fit: float
    c_pred: float
    d_fit: float
    e_samples: tuple[float, ...]

    @property
    def abs_err(self) -> float:
        return abs(self.c_fit - self.c_pred)


def shift_coefficient(l: int, m: int, bc: str, n: int = 1) -> float:
    """Predicted e^2 frequency-shift coefficient for the (l, m, n) mode.

    Dirichlet roots move with the universal coefficient
    alpha = (l^2 + l + m^2 - 1)/(4 l^2 + 4 l - 3): the j_l-proportional
    terms of the boundary expansion multiply a factor that vanishes at the
    root, so only the z j_l' term acts.  At a Neumann root u0 (where
    j_l'(u0) = 0) those terms survive; carrying the same expansion through
    the radial derivative and eliminating j_l''(u0) with the spherical
    Bessel equation leaves

        c = alpha - 2 beta / (u0^2 - l(l+1)),
        beta = (l^2 + l - 3 m^2)/(8 l^2 + 8 l - 6),

    which depends on n through u0.  beta summed over m in [-l, l] vanishes,
    so the m-averaged shift is (2l+1)/3 x 1/(2l+1) = 1/3 for both boundary
    conditions -- the average the energy expansion actually uses.
    """
    _validate_bc(bc)
    m = abs(m)
    alpha = spheroidal.radial_shift_alpha(l, m)
    if bc == "dirichlet":
        return alpha
    u0 = specfun.bessel_root(l, n, kind="derivative")
    beta = (l * l + l - 3.0 * m * m) / (8.0 * l * l + 8.0 * l - 6.0)
    return alpha - 2.0 * beta / (u0 * u0 - l * (l + 1))


def boundary_condition_value(l: int, m: int, z: float, e: float, bc: str) -> float:
    """Residual of the boundary condition at trial frequency z.

    Dirichlet: the regular radial function at xi = 1/e.  Neumann: its xi
    derivative there.  The spheroidal parameter gamma^2 = (z e)^2 moves
    with z, so every call rebuilds the eigendecomposition.
    """
    _validate_bc(bc)
    gamma2 = (z * e) ** 2
    xi = 1.0 / e
    if bc == "dirichlet":
        return spheroidal.radial_S(1, l, m, xi, gamma2)
    return spheroidal.radial_S_dxi(1, l, m, xi, gamma2)


def spheroidal_root(l: int, m: int, n: int, e: float, bc: str) -> FrequencyRoot:
    """Find the n-th positive cavity frequency at ellipticity e.

    A secant iteration starts from the perturbative seed z0 (1 + c e^2);
    if it wanders outside the perturbative window around the e = 0 Bessel
    root z0, the root is re-taken with Brent's method on a sign-change
    bracket inside that window.

    Raises
    ------
    BracketError
        If no sign change exists in the perturbative window (the root
        wandered); the searched interval is attached.
    ConvergenceError
        If the converged point fails the residual tolerance.
    """
    _validate_bc(bc)
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    if not (0.0 < e <= 0.3):
        raise DomainError(f"e must lie in (0, 0.3], got {e!r}")
    m = abs(m)

    z0 = specfun.bessel_root(l, n, kind=_bessel_kind(bc))
    c = shift_coefficient(l, m, bc, n)
    seed = z0 * (1.0 + c * e * e)

    def f(z: float) -> float:
        return boundary_condition_value(l, m, z, e, bc)

    # Window around the seed: generous against the e^4 terms the seed
    # ignores, but narrower than the ~pi spacing to the neighboring root.
    half = z0 * (0.02 + 4.0 * e**4)
    lo, hi = seed - half, seed + half

    z = None
    try:
        trial = optimize.newton(f, seed, x1=seed * (1.0 + 1e-4), tol=_Z_TOL, maxiter=60)
        if lo <= trial <= hi:
            z = float(trial)
    except (RuntimeError, DomainError):
        z = None
    if z is None:
        f_lo, f_hi = f(lo), f(hi)
        if f_lo * f_hi > 0.0:
            raise BracketError(
                f"no sign change around the perturbative seed for "
                f"(l={l}, m={m}, n={n}, e={e}, bc={bc})",
                interval=(lo, hi),
            )
        z = float(optimize.brentq(f, lo, hi, xtol=_Z_TOL, rtol=8.9e-16))

    residual = abs(f(z))
    if not (residual <= _RESIDUAL_TOL):
        raise ConvergenceError(
            f"boundary-condition residual {residual:.3e} exceeds "
            f"{_RESIDUAL_TOL:.0e} at (l={l}, m={m}, n={n}, e={e}, bc={bc})",
            bound=residual,
        )
    return FrequencyRoot(l=l, m=m, n=n, e=e, bc=bc, z=z, solver_residual=residual)


def root_shift_fit(
    l: int, m: int, bc: str, e_samples: tuple[float, ...] = DEFAULT_E_SAMPLES
) -> ShiftFit:
    """Fit the n = 1 root family to z(e) = z0 (1 + c e^2 + d e^4).

    ``e_samples`` must hold at least three distinct ellipticities in
    (0, 0.1]; z0 is pinned to the spherical root, so the fit is linear in
    (c, d) and done by least squares.
    """
    _validate_bc(bc)
    samples = tuple(sorted(set(float(e) for e in e_samples)))
    if len(samples) < 3:
        raise DomainError(f"need at least 3 distinct ellipticities, got {e_samples!r}")
    if any(not (0.0 < e <= 0.1) for e in samples):
        raise DomainError(f"fit ellipticities must lie in (0, 0.1], got {e_samples!r}")
    m = abs(m)

    z0 = specfun.bessel_root(l, 1, kind=_bessel_kind(bc))
    c_pred = shift_coefficient(l, m, bc, n=1)
    es = np.asarray(samples)
    zs = np.array([spheroidal_root(l, m, 1, e, bc).z for e in samples])

    design = np.vstack([es**2, es**4]).T
    cond = np.linalg.cond(design)
    if not (cond < 1e10):
        raise ConvergenceError(
            f"shift fit is ill-conditioned (cond={cond:.3e})", bound=cond
        )
    coef, *_ = np.linalg.lstsq(design, zs / z0 - 1.0, rcond=None)
    c_fit, d_fit = (float(v) for v in coef)
    if not (math.isfinite(c_fit) and math.isfinite(d_fit)):
        raise ConvergenceError("shift fit produced non-finite coefficients")
    return ShiftFit(
        l=l, m=m, bc=bc, z0=z0, c_fit=c_fit, c_pred=c_pred, d_fit=d_fit,
        e_samples=samples,
    )


def shift_fit_row(fit: ShiftFit) -> dict:
    """Row mapping for the shift table (column order SHIFT_CSV_COLUMNS)."""
    return {
        "l": fit.l,
        "m": fit.m,
        "bc": fit.bc,
        "z0": fit.z0,
        "c_pred": fit.c_pred,
        "c_fit": fit.c_fit,
        "abs_err": fit.abs_err,
    }


def energy_difference_check(
    bc: str, l_max: int, n_max: int, e: float, s: float = 3.0
) -> tuple[float, float]:
    """Finite mode-sum consistency check beneath the continuation machinery.

    Sums z(e)^{-s} - z0^{-s} (1 - s c e^2) over all modes with l <= l_max,
    |m| <= l, n <= n_max at a safely convergent exponent (default s = 3).
    Each term is O(e^4), so the residual collects exactly what the
    quadratic shift law misses.  Returns (residual, bound); the bound is a
    coarse e^4 envelope built from the quartic-coefficient cap and the
    second-order term of the binomial, and |residual| <= bound confirms
    the per-mode expansion before any analytic continuation is trusted.
    """
    _validate_bc(bc)
    if l_max < 0 or n_max < 1:
        raise DomainError(f"need l_max >= 0 and n_max >= 1, got {l_max}, {n_max}")
    if e == 0.0:
        return 0.0, 0.0
    if not (0.0 < e <= 0.3):
        raise DomainError(f"e must lie in [0, 0.3], got {e!r}")

    residual = 0.0
    bound = 0.0
    for l in range(l_max + 1):
        for m in range(l + 1):
            weight = 1.0 if m == 0 else 2.0
            for n in range(1, n_max + 1):
                z0 = specfun.bessel_root(l, n, kind=_bessel_kind(bc))
                c = shift_coefficient(l, m, bc, n)
                z = spheroidal_root(l, m, n, e, bc).z
                residual += weight * (z**-s - z0**-s * (1.0 - s * c * e * e))
                bound += (
                    weight
                    * z0**-s
                    * e**4
                    * (s * _QUARTIC_ENVELOPE + 0.5 * s * (s + 1.0) * c * c)
                )
    return residual, bound
