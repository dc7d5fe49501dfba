"""
Partial indices from the dimension staircase
============================================

Count solutions of Y+ = v Y- with growing pole order at infinity and read
off how the associated bundle splits.
"""

import numpy as np

from rhfactor import BoundaryFunction, JumpDatum, h0_dimension, splitting_type, unit_circle

circle = unit_circle(128)
z = circle.z

vals = np.zeros((z.size, 2, 2), complex)
vals[:, 0, 0] = z ** 2
vals[:, 1, 1] = 1 / z
jump = JumpDatum(circle, BoundaryFunction(circle, vals))

print(" m  dim")
for m in range(-3, 4):
    print(f"{m:2d}  {h0_dimension(jump, m)}")

st = splitting_type(jump)
print("splitting", st.indices, " det degree", jump.det_degree)

# a constant change of frame does not change the answer
rng = np.random.default_rng(0)
A = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
conj = JumpDatum(circle, BoundaryFunction(circle, A @ vals @ np.linalg.inv(A)))
print("conjugated", splitting_type(conj).indices)

# an off-diagonal entry can lower the jump: [[z, 1], [0, 1/z]] is trivial
tri = np.zeros_like(vals)
tri[:, 0, 0], tri[:, 0, 1], tri[:, 1, 1] = z, 1, 1 / z
print("triangular", splitting_type(JumpDatum(circle, BoundaryFunction(circle, tri))).indices)
