"""
Gluing Hoelder functions and extending jets
===========================================

The seminorm of two glued half-line pieces grows by at most 2^(1 - alpha),
and the odd power witness shows the constant cannot be improved.
"""

import numpy as np

from rhfactor.lipschitz import (HolderDatum, JetDatum, central_derivative, glue_half_lines,
                                jet_extend_1d)

t = np.linspace(0, 1, 401)
print("alpha  glued seminorm  2^(1-alpha)")
for alpha in (0.25, 0.5, 0.75):
    fm = HolderDatum(-t[::-1], -(t[::-1] ** alpha), alpha)
    fp = HolderDatum(t, t ** alpha, alpha)
    _, ok, info = glue_half_lines(fm, fp)
    print(f"{alpha:5.2f}  {info['seminorm']:.12f}  {info['bound_constant']:.12f}  {ok}")

# a smooth function with prescribed derivatives at 0
jet = JetDatum((1.0, -2.0, 0.5, 3.0))
ext = jet_extend_1d(jet, halfwidth=1.0)
for s, target in enumerate(jet.coefficients):
    print(f"derivative {s}: {central_derivative(ext, s, 1e-2):+.6f}  (target {target:+.1f})")
