"""Riemann-Hilbert factorization on the sphere and on elliptic curves.

Submodules:

- :mod:`rhfactor.curve` -- sampled closed curves, winding numbers
- :mod:`rhfactor.cauchy` -- Cauchy transform and one-sided boundary values
- :mod:`rhfactor.rh_scalar` -- degrees, logarithms, scalar factorization
- :mod:`rhfactor.rh_vector` -- matrix problems, partial indices, solving
- :mod:`rhfactor.rh_elliptic` -- factorization on C*/<alpha>
- :mod:`rhfactor.lipschitz` -- Hölder seminorms, gluing, jet extension
"""

__version__ = "0.1.0"

from .cauchy import (BoundaryFunction, boundary_values, cauchy_offcurve,  # noqa: E402
                     plemelj_residual, value_at_infinity)
from .curve import ClosedCurve, from_fourier, unit_circle, winding_number  # noqa: E402
from .rh_elliptic import EllipticProblem, elliptic_factorize  # noqa: E402
from .rh_scalar import (class_equiv, continuous_log, degree,  # noqa: E402
                        factorize_scalar, moduli_split, solve_scalar_rh)
from .rh_vector import (JumpDatum, h0_dimension, sl2_stratum,  # noqa: E402
                        solve_rh, splitting_type)

__all__ = [
    "ClosedCurve", "unit_circle", "from_fourier", "winding_number",
    "BoundaryFunction", "cauchy_offcurve", "boundary_values", "plemelj_residual",
    "value_at_infinity", "degree", "continuous_log", "factorize_scalar",
    "moduli_split", "class_equiv", "solve_scalar_rh", "JumpDatum", "h0_dimension",
    "splitting_type", "solve_rh", "sl2_stratum", "EllipticProblem",
    "elliptic_factorize",
]
