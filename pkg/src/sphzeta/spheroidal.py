"""Spheroidal eigenvalues, angular functions and radial functions.

The angular equation is solved by expanding in associated Legendre
polynomials of fixed order m and degrees L = l + 2k.  Using the coupling

    eta^2 P_L^m = A+_L P_{L+2}^m + A0_L P_L^m + A-_L P_{L-2}^m,

the expansion coefficients satisfy a three-term recurrence, i.e. a
tridiagonal eigenproblem.  Eigenvalues follow the convention in which
lambda -> l(l+1) as gamma2 -> 0.  Coefficients are normalized so the
angular function carries the same norm as P_l^m (and the radial series then
approaches j_l for large real argument), with a positive leading
coefficient.

The stored coefficients ``a_k`` are signed so that the angular function is

    ps(eta) = sum_k (-1)^k a_k P_{l+2k}^m(eta)

and the radial function of kind 1 or 3 is

    S(xi) = (1 - 1/xi^2)^{m/2} / A * sum_k a_k f_{l+2k}(gamma*xi),
    A     = sum_k (-1)^k a_k,

with f = j (kind 1) or j + i y (kind 3).  Coefficients with superscript -m
(used by the radial series) come from running the recurrence with m -> -m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import linalg, special

from .errors import BranchAmbiguityError, ConvergenceError, DomainError
from .specfun import assoc_legendre_table

__all__ = [
    "EigenDecomp",
    "eigen_decomp",
    "lambda_eigenvalue",
    "ps_angular",
    "ps_angular_approx",
    "radial_S",
    "radial_S_dxi",
    "radial_S1_approx",
    "radial_shift_alpha",
]


def _a_plus(L: int, m: int) -> float:
    return (L - m + 1) * (L - m + 2) / ((2 * L + 1) * (2 * L + 3))


def _a_zero(L: int, m: int) -> float:
    return (2 * L * (L + 1) - 2 * m * m - 1) / ((2 * L - 1) * (2 * L + 3))


def _a_minus(L: int, m: int) -> float:
    return (L + m) * (L + m - 1) / ((2 * L + 1) * (2 * L - 1))


def _factorial_ratio(L: int, m: int) -> float:
    """(L+m)! / (L-m)! as a running product (no factorial overflow)."""
    if m >= 0:
        out = 1.0
        for j in range(L - m + 1, L + m + 1):
            out *= j
        return out
    out = 1.0
    for j in range(L + m + 1, L - m + 1):
        out *= j
    return 1.0 / out


@dataclass(frozen=True)
class EigenDecomp:
    """Eigenvalue and Legendre-series coefficients of one spheroidal mode.

    ``coeffs[i]`` is a_k for k = k_min + i; degrees run over L = l + 2k with
    L >= |m|.  ``residual`` is the worst scaled three-term-recurrence defect
    over interior rows.
    """

    l: int
    m: int
    gamma2: float
    lam: float
    k_min: int
    coeffs: tuple = field(repr=False)
    residual: float = 0.0

    @property
    def k_max(self) -> int:
        return self.k_min + len(self.coeffs) - 1

    def coeff(self, k: int) -> float:
        if k < self.k_min or k > self.k_max:
            return 0.0
        return self.coeffs[k - self.k_min]

    @property
    def coeffs_by_k(self) -> dict:
        return {self.k_min + i: c for i, c in enumerate(self.coeffs)}


def _validate_mode(l: int, m: int) -> tuple[int, int]:
    if not isinstance(l, (int, np.integer)) or l < 0:
        raise DomainError(f"l must be a non-negative integer, got {l!r}")
    if not isinstance(m, (int, np.integer)) or abs(m) > l:
        raise DomainError(f"m must be an integer with |m| <= l, got m={m!r}, l={l}")
    return int(l), int(m)


def _solve_tridiagonal(l, m, gamma2, n_upper):
    """Eigenvalue and plain-series coefficients d_k on the truncated ladder."""
    k_min = math.ceil((abs(m) - l) / 2)
    ks = np.arange(k_min, n_upper + 1)
    Ls = l + 2 * ks
    n = len(ks)
    diag = Ls * (Ls + 1.0) + gamma2 * np.array([_a_zero(L, m) for L in Ls])
    upper = gamma2 * np.array([_a_minus(L, m) for L in Ls[1:]])  # M[i, i+1]
    lower = gamma2 * np.array([_a_plus(L, m) for L in Ls[:-1]])  # M[i+1, i]

    p = -k_min  # index of the row with L = l
    if gamma2 == 0.0 or n == 1:
        lam = float(diag[p])
        d = np.zeros(n)
        d[p] = 1.0
        return lam, d, k_min

    # The similarity transform e_i = sqrt(upper_i * lower_i) symmetrizes the
    # matrix (interior products are strictly positive for L >= |m|).
    offd = np.sqrt(upper * lower)
    evals = linalg.eigh_tridiagonal(diag, offd, eigvals_only=True)
    lam = float(evals[p])
    gaps = np.abs(evals - lam)
    gaps[p] = np.inf
    if gaps.min() <= 1e-9 * max(1.0, abs(lam)):
        raise BranchAmbiguityError(
            f"eigenvalue branch for (l={l}, m={m}, gamma2={gamma2}) is separated "
            f"from its neighbour by only {gaps.min():.3e}"
        )

    # Inverse iteration on the unsymmetrized matrix, seeded at the spherical
    # limit (k = 0 dominant).
    d = np.zeros(n)
    d[p] = 1.0
    eps = 1e-12 * (1.0 + abs(lam))
    for _ in range(6):
        ab = np.zeros((3, n))
        ab[0, 1:] = upper
        ab[1, :] = diag - (lam + eps)
        ab[2, :-1] = lower
        try:
            with np.errstate(all="ignore"):
                v = linalg.solve_banded((1, 1), ab, d)
        except linalg.LinAlgError:
            eps *= 100.0
            continue
        if not np.all(np.isfinite(v)):
            eps *= 100.0
            continue
        d = v / np.abs(v).max()
        if abs(np.abs(v).max()) > 1e10:  # converged well past machine precision
            break
    return lam, d, k_min


def eigen_decomp(
    l: int, m: int, gamma2: float, trunc_tol: float = 1e-14, depth: int | None = None
) -> EigenDecomp:
    """Solve the angular eigenproblem for mode (l, m) at a given gamma2.

    Parameters
    ----------
    l, m : int
        Mode index, l >= 0 and |m| <= l.
    gamma2 : float
        Spheroidal parameter.  Negative values are accepted (oblate
        convention is a sign flip done by callers).
    trunc_tol : float
        The expansion is deepened until the last coefficient is below this
        fraction of the largest one.
    depth : int, optional
        Initial number of terms above k = 0; grows automatically.

    Returns
    -------
    EigenDecomp
    """
    l, m = _validate_mode(l, m)
    g2 = float(gamma2)
    if not math.isfinite(g2):
        raise DomainError(f"gamma2 must be finite, got {gamma2!r}")
    K = depth if depth is not None else max(10, math.ceil(4.0 * math.sqrt(abs(g2)) + 10))

    for _ in range(4):
        lam, d, k_min = _solve_tridiagonal(l, m, g2, K)
        dmax = np.abs(d).max()
        if abs(d[-1]) <= max(trunc_tol, 1e-15) * dmax or g2 == 0.0:
            break
        K = K + K // 2 + 4
    else:
        raise ConvergenceError(
            f"coefficient tail for (l={l}, m={m}, gamma2={g2}) did not fall "
            f"below trunc_tol={trunc_tol} at depth {K}",
            bound=abs(d[-1]) / dmax,
        )

    # Residual of the three-term recurrence over interior rows, scaled.
    ks = np.arange(k_min, K + 1)
    Ls = l + 2 * ks
    n = len(ks)
    Md = np.empty(n)
    for i, L in enumerate(Ls):
        acc = (L * (L + 1.0) + g2 * _a_zero(L, m)) * d[i]
        if i > 0:
            acc += g2 * _a_plus(Ls[i - 1], m) * d[i - 1]
        if i + 1 < n:
            acc += g2 * _a_minus(Ls[i + 1], m) * d[i + 1]
        Md[i] = acc
    scale = np.abs(d).max() * max(1.0, abs(lam))
    residual = float(np.abs(Md - lam * d)[:-1].max() / scale) if n > 1 else 0.0

    # Normalization: sum_k d_k^2 * 2 (L+m)!/((2L+1)(L-m)!) equals the same
    # expression at the spherical limit, and the leading coefficient is
    # positive.
    norm2 = sum(
        d[i] ** 2 * 2.0 * _factorial_ratio(int(L), m) / (2 * L + 1) for i, L in enumerate(Ls)
    )
    target = 2.0 * _factorial_ratio(l, m) / (2 * l + 1)
    d = d * math.sqrt(target / norm2)
    i0 = -k_min
    if d[i0] == 0.0:
        raise BranchAmbiguityError(
            f"leading coefficient vanished for (l={l}, m={m}, gamma2={g2})"
        )
    if d[i0] < 0.0:
        d = -d

    signs = np.where(ks % 2 == 0, 1.0, -1.0)
    a = signs * d
    return EigenDecomp(
        l=l, m=m, gamma2=g2, lam=lam, k_min=int(k_min),
        coeffs=tuple(float(v) for v in a), residual=residual,
    )


def lambda_eigenvalue(l: int, m: int, gamma2: float, trunc_tol: float = 1e-14) -> float:
    """Angular eigenvalue lambda_lm(gamma2), equal to l(l+1) at gamma2 = 0."""
    return eigen_decomp(l, m, gamma2, trunc_tol=trunc_tol).lam


def ps_angular(decomp: EigenDecomp, eta: float) -> float:
    """Angular function ps(eta) = sum_k (-1)^k a_k P_{l+2k}^m(eta)."""
    if not (-1.0 <= eta <= 1.0):
        raise DomainError(f"eta must lie in [-1, 1], got {eta!r}")
    l, m = decomp.l, decomp.m
    L_max = l + 2 * decomp.k_max
    table = assoc_legendre_table(m, L_max, eta)
    acc = 0.0
    for i, k in enumerate(range(decomp.k_min, decomp.k_max + 1)):
        sign = 1.0 if k % 2 == 0 else -1.0
        acc += sign * decomp.coeffs[i] * table[l + 2 * k]
    return acc


def ps_angular_approx(l: int, m: int, eta: float, gamma2: float) -> float:
    """First-order small-gamma2 angular function.

    P_l^m plus the gamma2-linear admixture of P_{l-2}^m and P_{l+2}^m; for
    (l, m) = (0, 0) the correction is -gamma2 P_2 / 9.
    """
    l, m = _validate_mode(l, m)
    if not (-1.0 <= eta <= 1.0):
        raise DomainError(f"eta must lie in [-1, 1], got {eta!r}")
    table = assoc_legendre_table(m, l + 2, eta)
    val = table[l]
    c_minus = (l + m - 1) * (l + m) / (2.0 * (2 * l - 1) ** 2 * (2 * l + 1))
    c_plus = (l - m + 1) * (l - m + 2) / (2.0 * (2 * l + 1) * (2 * l + 3) ** 2)
    if l - 2 >= abs(m):
        val += gamma2 * c_minus * table[l - 2]
    val -= gamma2 * c_plus * table[l + 2]
    return val


def _radial_series(l, m, xi, gamma2, kind):
    """Common path for both kinds; kind 3 just adds the imaginary part."""
    decomp = eigen_decomp(l, -m, gamma2)
    ks = np.arange(decomp.k_min, decomp.k_max + 1)
    Ls = l + 2 * ks
    a = np.asarray(decomp.coeffs)
    signs = np.where(ks % 2 == 0, 1.0, -1.0)
    A = float(np.sum(signs * a))
    x = math.sqrt(gamma2) * xi
    fj = special.spherical_jn(Ls, x)
    if kind == 3:
        fy = special.spherical_yn(Ls, x)
        series = complex(np.sum(a * fj), np.sum(a * fy))
    else:
        series = float(np.sum(a * fj))
    return series / A, decomp


def radial_S(kind: int, l: int, m: int, xi: float, gamma2: float):
    """Radial spheroidal function of kind 1 (j-based) or 3 (outgoing h-based).

    Parameters
    ----------
    kind : int
        1 for the regular function, 3 for the outgoing one (complex).
    xi : float
        Radial coordinate, xi >= 1.  At xi = 1 with m != 0 the prefactor
        vanishes and exactly 0.0 is returned.
    gamma2 : float
        Non-negative spheroidal parameter; the argument of the Bessel
        factors is gamma * xi.

    Notes
    -----
    For large gamma*xi the function approaches j_l(gamma*xi) (kind 1); the
    normalization constant A = sum_k (-1)^k a_k enforces this.
    """
    l, m = _validate_mode(l, m)
    if kind not in (1, 3):
        raise DomainError(f"kind must be 1 or 3, got {kind!r}")
    if not (xi >= 1.0):
        raise DomainError(f"xi must be >= 1, got {xi!r}")
    if not (gamma2 >= 0.0):
        raise DomainError(f"gamma2 must be >= 0 for the radial function, got {gamma2!r}")
    if xi == 1.0 and m != 0:
        return 0.0 if kind == 1 else complex(0.0)
    if kind == 3 and gamma2 * xi == 0.0:
        raise DomainError("kind-3 radial function is singular at gamma*xi = 0")
    series, _ = _radial_series(l, m, xi, gamma2, kind)
    pref = (1.0 - xi**-2) ** (m / 2.0) if m != 0 else 1.0
    return pref * series


def radial_S_dxi(kind: int, l: int, m: int, xi: float, gamma2: float):
    """Derivative of radial_S with respect to xi (term-by-term).

    For m != 0 the prefactor derivative is singular at xi = 1, so the
    boundary itself is excluded there.
    """
    l, m = _validate_mode(l, m)
    if kind not in (1, 3):
        raise DomainError(f"kind must be 1 or 3, got {kind!r}")
    if m != 0 and not (xi > 1.0):
        raise DomainError(f"xi must be > 1 for m != 0 derivatives, got {xi!r}")
    if m == 0 and not (xi >= 1.0):
        raise DomainError(f"xi must be >= 1, got {xi!r}")
    if not (gamma2 >= 0.0):
        raise DomainError(f"gamma2 must be >= 0 for the radial function, got {gamma2!r}")
    if kind == 3 and gamma2 * xi == 0.0:
        raise DomainError("kind-3 radial function is singular at gamma*xi = 0")

    decomp = eigen_decomp(l, -m, gamma2)
    ks = np.arange(decomp.k_min, decomp.k_max + 1)
    Ls = l + 2 * ks
    a = np.asarray(decomp.coeffs)
    signs = np.where(ks % 2 == 0, 1.0, -1.0)
    A = float(np.sum(signs * a))
    gamma = math.sqrt(gamma2)
    x = gamma * xi
    fj = special.spherical_jn(Ls, x)
    fjp = special.spherical_jn(Ls, x, derivative=True)
    if kind == 3:
        fy = special.spherical_yn(Ls, x)
        fyp = special.spherical_yn(Ls, x, derivative=True)
        series = complex(np.sum(a * fj), np.sum(a * fy))
        series_p = complex(np.sum(a * fjp), np.sum(a * fyp))
    else:
        series = float(np.sum(a * fj))
        series_p = float(np.sum(a * fjp))

    if m == 0:
        return gamma * series_p / A
    pref = (1.0 - xi**-2) ** (m / 2.0)
    dpref = m * xi**-3 * (1.0 - xi**-2) ** (m / 2.0 - 1.0)
    return (dpref * series + pref * gamma * series_p) / A


def radial_shift_alpha(l: int, m: int) -> float:
    """Coefficient of -e^2 z j_l'(z) in the boundary expansion of the radial
    function: (l^2 + l + m^2 - 1) / (4 l^2 + 4 l - 3)."""
    l, m = _validate_mode(l, m)
    return (l * l + l + m * m - 1.0) / (4.0 * l * l + 4.0 * l - 3.0)


def radial_S1_approx(l: int, m: int, z: float, e: float) -> float:
    """Small-ellipticity boundary value of the kind-1 radial function.

    j_l(z) - e^2 [ alpha z j_l'(z) - (beta + m/2) j_l(z) ] with
    alpha = (l^2+l+m^2-1)/(4l^2+4l-3), beta = (l^2+l-3m^2)/(8l^2+8l-6).
    """
    l, m = _validate_mode(l, m)
    if not (0.0 <= e < 1.0):
        raise DomainError(f"e must lie in [0, 1), got {e!r}")
    alpha = radial_shift_alpha(l, m)
    beta = (l * l + l - 3.0 * m * m) / (8.0 * l * l + 8.0 * l - 6.0)
    j = special.spherical_jn(l, z)
    jp = special.spherical_jn(l, z, derivative=True)
    return float(j - e * e * (alpha * z * jp - (beta + 0.5 * m) * j))
