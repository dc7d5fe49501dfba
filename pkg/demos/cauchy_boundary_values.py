"""
Boundary values of the Cauchy transform
=======================================

Split a function on a closed curve into the parts that extend
holomorphically inside and outside, and watch the quadrature converge.
"""

import numpy as np

from rhfactor import BoundaryFunction, boundary_values, from_fourier, plemelj_residual

# an ellipse given by its Fourier coefficients z(theta) = e^{i theta} + 0.3 e^{-i theta}
curve = from_fourier({1: 1.0, -1: 0.3}, 128)

# u has a pole at 1.6 (outside) and an entire part; the exterior pole term
# belongs to the interior side, so the exact split is (u, 0)
u = 1 / (curve.z - 1.6) + curve.z ** 2
um, up = boundary_values(curve, BoundaryFunction(curve, u))
print("interior error", np.abs(um.samples - u).max())
print("exterior error", np.abs(up.samples).max())
print("jump residual ", plemelj_residual(curve, BoundaryFunction(curve, u)))

# spectral convergence: every doubling of n gains digits
print("\n   n   boundary-value error")
for n in (16, 32, 64, 128):
    c = from_fourier({1: 1.0, -1: 0.3}, n)
    v = 1 / (c.z - 1.6) + c.z ** 2
    vm, _ = boundary_values(c, BoundaryFunction(c, v))
    print(f"{n:4d}   {np.abs(vm.samples - v).max():.2e}")
