"""Row generators for the three comparison figures.

Shared between the CLI (which serializes the rows to CSV) and the
selftest (which checks the same rows against their accuracy targets), so
the two surfaces can never drift apart.
"""

from __future__ import annotations

import numpy as np

from . import spheroidal, zeta_casimir

# One curve per angular index; the renderer maps these to the four line
# styles (full, dashed, dotted, dot-dash).
CURVE_L_VALUES = (0, 10, 20, 30)

FIG3_ETA = 0.5
FIG3_GAMMA2_GRID = np.linspace(0.0, 1.0, 50)

FIG4_DEFAULT_Z = 10.0
FIG4_E_GRID = np.linspace(0.0, 0.3, 60)

FIG1_E_GRID = np.linspace(0.0, 0.3, 61)

FIG1_COLUMNS = ("e", "E_prolate", "E_oblate")
FIG3_COLUMNS = ("gamma2", "l", "ratio")
FIG4_COLUMNS = ("e", "l", "ratio")


def fig3_rows() -> list[tuple[float, int, float]]:
    """(gamma2, l, ratio) rows comparing the first-order angular function
    against the full expansion at eta = 0.5, m = 0."""
    rows = []
    for l in CURVE_L_VALUES:
        for g2 in FIG3_GAMMA2_GRID:
            g2 = float(g2)
            decomp = spheroidal.eigen_decomp(l, 0, g2)
            full = spheroidal.ps_angular(decomp, FIG3_ETA)
            approx = spheroidal.ps_angular_approx(l, 0, FIG3_ETA, g2)
            rows.append((g2, l, approx / full))
    return rows


def fig4_rows(z: float = FIG4_DEFAULT_Z) -> list[tuple[float, int, float]]:
    """(e, l, ratio) rows comparing the first-order radial function against
    the full expansion at fixed dimensionless frequency z = k*a."""
    rows = []
    for l in CURVE_L_VALUES:
        for e in FIG4_E_GRID:
            e = float(e)
            if e == 0.0:
                # Both forms degenerate to the same spherical Bessel value;
                # the full function's xi = 1/e argument is unusable here.
                ratio = 1.0
            else:
                gamma2 = (z * e) ** 2
                full = spheroidal.radial_S(1, l, 0, 1.0 / e, gamma2)
                ratio = spheroidal.radial_S1_approx(l, 0, z, e) / full
            rows.append((e, l, ratio))
    return rows


def fig1_rows(bc: str = "dirichlet") -> list[tuple[float, float, float]]:
    """(e, E_prolate, E_oblate) rows: total spheroid energy in units 1/a
    for both geometries at fixed scale a = 1."""
    prolate = zeta_casimir.spheroid_energy(1.0, 0.0, "prolate", bc)
    oblate = zeta_casimir.spheroid_energy(1.0, 0.0, "oblate", bc)
    return [
        (float(e), prolate.evaluate(float(e)), oblate.evaluate(float(e)))
        for e in FIG1_E_GRID
    ]
