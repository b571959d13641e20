"""Spherical Bessel functions, associated Legendre polynomials and their roots.

This module is the numerical substrate for everything else in the package:
spherical Bessel functions of the first/second kind and a derived Hankel
function, the modified function ``i_l`` with an overflow-free logarithmic
derivative, associated Legendre polynomials with the Condon-Shortley phase,
and a bracketed root finder for ``j_l`` and ``j_l'``.

Values delegate to scipy.special where a mature routine exists; the Legendre
recurrence and root bracketing are implemented here.  Everything is scalar in,
scalar out, and deterministic.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import optimize, special

from .errors import BracketError, DomainError

__all__ = [
    "sph_bessel_j",
    "sph_bessel_j_prime",
    "sph_bessel_y",
    "sph_bessel_y_prime",
    "sph_hankel1",
    "sph_bessel_i",
    "sph_bessel_i_logderiv",
    "assoc_legendre",
    "assoc_legendre_table",
    "bessel_root",
]


def _check_degree(l: int, name: str = "l") -> int:
    if not isinstance(l, (int, np.integer)) or l < 0:
        raise DomainError(f"{name} must be a non-negative integer, got {l!r}")
    return int(l)


def sph_bessel_j(l: int, x: float) -> float:
    """Spherical Bessel function of the first kind, j_l(x).

    Parameters
    ----------
    l : int
        Non-negative order.
    x : float
        Argument, x >= 0.  ``j_l(0)`` is 1 for l = 0 and 0 otherwise.
    """
    l = _check_degree(l)
    if not (x >= 0.0):
        raise DomainError(f"x must be >= 0 for j_l, got {x!r}")
    return float(special.spherical_jn(l, x))


def sph_bessel_j_prime(l: int, x: float) -> float:
    """Derivative j_l'(x) with respect to the argument."""
    l = _check_degree(l)
    if not (x >= 0.0):
        raise DomainError(f"x must be >= 0 for j_l', got {x!r}")
    return float(special.spherical_jn(l, x, derivative=True))


def sph_bessel_y(l: int, x: float) -> float:
    """Spherical Bessel function of the second kind, y_l(x), for x > 0."""
    l = _check_degree(l)
    if not (x > 0.0):
        raise DomainError(f"x must be > 0 for y_l, got {x!r}")
    return float(special.spherical_yn(l, x))


def sph_bessel_y_prime(l: int, x: float) -> float:
    """Derivative y_l'(x) with respect to the argument, for x > 0."""
    l = _check_degree(l)
    if not (x > 0.0):
        raise DomainError(f"x must be > 0 for y_l', got {x!r}")
    return float(special.spherical_yn(l, x, derivative=True))


def sph_hankel1(l: int, x: float, derivative: bool = False) -> complex:
    """Spherical Hankel function of the first kind, h_l^(1) = j_l + i y_l.

    Only defined for x > 0 (y_l diverges at the origin).
    """
    l = _check_degree(l)
    if not (x > 0.0):
        raise DomainError(f"x must be > 0 for h_l^(1), got {x!r}")
    jj = special.spherical_jn(l, x, derivative=derivative)
    yy = special.spherical_yn(l, x, derivative=derivative)
    return complex(jj, yy)


def sph_bessel_i(l: int, x: float) -> float:
    """Modified spherical Bessel function i_l(x) (exponentially growing kind).

    Raises
    ------
    OverflowError
        When the raw value exceeds the double range (x beyond about 712).
        Use :func:`sph_bessel_i_logderiv` for large arguments instead; the
        logarithmic derivative never overflows.
    """
    l = _check_degree(l)
    if not (x >= 0.0):
        raise DomainError(f"x must be >= 0 for i_l, got {x!r}")
    with np.errstate(over="ignore"):
        val = float(special.spherical_in(l, x))
    if not math.isfinite(val):
        raise OverflowError(f"i_{l}({x}) overflows double precision")
    return val


def sph_bessel_i_logderiv(l: int, x: float) -> float:
    """Logarithmic derivative i_l'(x)/i_l(x), computed without overflow.

    Uses exponentially scaled cylinder functions:
    i_l'(x)/i_l(x) = I_nu'(x)/I_nu(x) - 1/(2x) with nu = l + 1/2, and the
    scaled ratio (ive(nu-1) + ive(nu+1)) / (2 ive(nu)) is overflow-free for
    any argument.  Tends to 1 - (l(l+1)/2 + ...)/x^2-style behaviour for
    large x and to l/x near the origin.
    """
    l = _check_degree(l)
    if not (x > 0.0):
        raise DomainError(f"x must be > 0 for the log-derivative, got {x!r}")
    nu = l + 0.5
    num = special.ive(nu - 1.0, x) + special.ive(nu + 1.0, x)
    den = special.ive(nu, x)
    return float(num / (2.0 * den) - 0.5 / x)


def _legendre_mm(m: int, eta: float) -> float:
    # Seed P_m^m = (-1)^m (2m-1)!! (1-eta^2)^{m/2}, built incrementally to
    # postpone overflow for large m.
    s = math.sqrt(max(0.0, 1.0 - eta * eta))
    val = 1.0
    for k in range(1, m + 1):
        val *= -(2 * k - 1) * s
    return val


def assoc_legendre_table(m: int, l_max: int, eta: float) -> np.ndarray:
    """All P_L^m(eta) for L = 0..l_max in one upward recurrence.

    Returns an array indexed by degree L; entries with L < |m| are zero.
    Uses the Condon-Shortley phase.  Negative m is mapped through
    P_L^{-m} = (-1)^m (L-m)!/(L+m)! P_L^m.
    """
    if not (-1.0 <= eta <= 1.0):
        raise DomainError(f"eta must lie in [-1, 1], got {eta!r}")
    l_max = _check_degree(l_max, "l_max")
    ma = abs(int(m))
    out = np.zeros(l_max + 1)
    if ma > l_max:
        return out
    pmm = _legendre_mm(ma, eta)
    out[ma] = pmm
    if ma + 1 <= l_max:
        out[ma + 1] = eta * (2 * ma + 1) * pmm
    for L in range(ma + 2, l_max + 1):
        out[L] = (
            eta * (2 * L - 1) * out[L - 1] - (L + ma - 1) * out[L - 2]
        ) / (L - ma)
    if m < 0:
        # factorial ratio (L-ma)!/(L+ma)! applied degree by degree
        sign = -1.0 if ma % 2 else 1.0
        for L in range(ma, l_max + 1):
            ratio = 1.0
            for j in range(L - ma + 1, L + ma + 1):
                ratio *= j
            out[L] *= sign / ratio
    return out


def assoc_legendre(l: int, m: int, eta: float) -> float:
    """Associated Legendre polynomial P_l^m(eta), Condon-Shortley phase.

    Examples
    --------
    P_1(0.5) = 0.5 and P_1^1(0.5) = -sqrt(0.75) ~= -0.8660254.
    """
    l = _check_degree(l)
    if abs(m) > l:
        raise DomainError(f"|m| must not exceed l, got l={l}, m={m}")
    return float(assoc_legendre_table(m, l, eta)[l])


def _j_prime2(l: int, x: float) -> float:
    # Second derivative via the spherical Bessel ODE, for the Newton polish.
    j = special.spherical_jn(l, x)
    jp = special.spherical_jn(l, x, derivative=True)
    return -2.0 / x * jp - (1.0 - l * (l + 1) / (x * x)) * j


def bessel_root(l: int, n: int, kind: str = "value") -> float:
    """n-th positive root of j_l (kind="value") or j_l' (kind="derivative").

    Brackets by scanning for a sign change (consecutive roots are separated
    by more than the scan step for all orders), refines with Brent's method
    and applies one Newton polish.  The trivial root of j_0' at x = 0 is not
    counted.

    Raises
    ------
    BracketError
        If no sign change is found; the searched interval is attached.
    """
    l = _check_degree(l)
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    if kind not in ("value", "derivative"):
        raise DomainError(f"kind must be 'value' or 'derivative', got {kind!r}")

    if kind == "value":
        f = lambda x: special.spherical_jn(l, x)
        fp = lambda x: special.spherical_jn(l, x, derivative=True)
    else:
        f = lambda x: special.spherical_jn(l, x, derivative=True)
        fp = lambda x: _j_prime2(l, x)

    # Scan upward from just above the origin; all roots below the first
    # zero of J_{l+1/2} are excluded automatically since f has no sign
    # change there.
    step = 0.5
    x_lo = 0.25 if l == 0 else 0.5 * l
    x_hi = x_lo + step
    found = 0
    f_lo = f(x_lo)
    limit = (l + 0.5) + (n + 2) * math.pi + 10.0
    while x_hi < limit:
        f_hi = f(x_hi)
        if f_lo == 0.0:  # landed exactly on a root (rare)
            found += 1
            if found == n:
                return x_lo
        elif f_lo * f_hi < 0.0:
            found += 1
            if found == n:
                root = optimize.brentq(f, x_lo, x_hi, xtol=1e-13, rtol=8.9e-16)
                # one Newton polish
                d = fp(root)
                if d != 0.0:
                    polished = root - f(root) / d
                    if x_lo <= polished <= x_hi:
                        root = polished
                return float(root)
        x_lo, f_lo = x_hi, f_hi
        x_hi += step
    raise BracketError(
        f"could not bracket root n={n} of j_{l}"
        f"{'' if kind == 'value' else chr(39)} while scanning "
        f"[{0.25 if l == 0 else 0.5 * l:.2f}, {limit:.2f}]",
        interval=(0.25 if l == 0 else 0.5 * l, limit),
    )
