"""Spheroidal wave functions and zeta-regularized Casimir energies.

The package computes prolate/oblate spheroidal eigenvalues and wave
functions from a corrected three-term recurrence, perturbative boundary
frequencies of slightly deformed spherical cavities, Laurent data of the
interior Dirichlet sphere zeta function at s = -1, total (interior plus
exterior) sphere vacuum energies for several boundary conditions, and the
derived deformation factors for spheroidal boundaries and bag-model states.
"""

__version__ = "0.1.0"

from .errors import (
    BracketError,
    BranchAmbiguityError,
    ConvergenceError,
    DomainError,
    SphzetaError,
)

__all__ = [
    "__version__",
    "SphzetaError",
    "DomainError",
    "BracketError",
    "ConvergenceError",
    "BranchAmbiguityError",
]
