"""
The eight stratum bounds at a glance
====================================

Evaluate the alpha values for a fixed ambient dimension, see which one is
smallest at each degree, and compare with the regime-tagged headline bound.
"""

import numpy as np

from hypercodim import Params, alphas, composition_consistency, dstar, theorem01_bound

N = 7
degrees = np.arange(4, 15)

# one row per degree; object dtype keeps the integers exact
keys = ["a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8"]
table = np.array([[alphas(Params(int(d), N)).alpha[k] for k in keys] for d in degrees], dtype=object)

print(f"N = {N}")
print("  d " + "".join(f"{k:>10}" for k in keys))
for d, row in zip(degrees, table):
    print(f"{d:3d} " + "".join(f"{v:>10}" for v in row))

# the minimum and where it sits
for d in degrees:
    ab = alphas(Params(int(d), N))
    t01 = theorem01_bound(Params(int(d), N))
    print(f"d={d:2d}  min={ab.min_value:>6} at {ab.argmin:<8} headline={t01.value:>6} ({t01.regime})")

# below dstar the a7 curve is the lower one, above it a8 takes over
print("dstar(N) =", dstar(N))

# rebuild each alpha from the general bounds; nonzero entries are worth a look
print(composition_consistency(Params(4, N)).differences())
