"""
Inhomogeneous problems with a prescribed value at infinity
==========================================================

Y+ = v Y- with Y+ tending to a given constant. Solvable for v = 2,
obstructed for v = z.
"""

import numpy as np

from rhfactor import solve_scalar_rh, unit_circle

circle = unit_circle(256)

rep = solve_scalar_rh(circle, np.full(256, 2.0), m=0, d=0, gamma_tilde=[1.0])
print("v = 2: solvable", rep.solvable, " residual", rep.residual,
      " affine dimension", rep.affine_dimension)
print("Y-(0.3) =", rep.interior(np.array([0.3]))[0, 0].real,
      " Y+(5) =", rep.exterior(np.array([5.0]))[0, 0].real)

for N in (16, 32, 64):
    r = solve_scalar_rh(circle, circle.z, m=0, d=0, gamma_tilde=[1.0], N=N)
    print(f"v = z, N = {N}: solvable {r.solvable}, residual {r.residual:.3f}")
