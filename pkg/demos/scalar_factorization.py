"""
Scalar factorization and degrees
================================

Glue two nowhere-zero loops of equal degree into one function and check
the factorization identity.
"""

import numpy as np

from rhfactor import class_equiv, degree, factorize_scalar, unit_circle

circle = unit_circle(256)
z = circle.z

f_minus = z * np.exp(0.3 * z - 0.2 / z)
f_plus = z * np.exp(np.sin(z) + 0.1 / z ** 2)
print("degrees", degree(circle, f_minus), degree(circle, f_plus))

f, cm, cp = factorize_scalar(circle, f_minus, f_plus)
defect = np.abs(np.exp(cm.samples) * f_minus - np.exp(cp.samples) * f_plus).max()
print("factorization defect", defect)

# the two sides of the glued class
print("f ~ f_minus inside? ", class_equiv(circle, f.samples, f_minus, "interior"))
print("f ~ f_plus outside? ", class_equiv(circle, f.samples, f_plus, "exterior"))
