"""Pontrjagin squares and reflection orbits of classes mod n."""

import numpy as np

from ellfib import lattice as lat
from ellfib.lattice import ModClass

L = lat.lambda_d(2)
print(L, "det", L.det())

# the square of a lift mod 2n does not depend on the lift
a = ModClass(3, np.arange(L.rank) % 3)
lifts = [np.array(a.coords) + 3 * np.random.default_rng(s).integers(-4, 5, L.rank) for s in range(4)]
print(lat.pontrjagin(L, a), [lat.square(L, x) % 6 for x in lifts])

# one wall representative per even level
for j in range(0, 8, 2):
    v = lat.wall_representative(L, j)
    print(j, lat.square(L, v), lat.component_label(L, ModClass(4, v)))
print("components for n = 4:", lat.component_count(2, 4))

# U + U mod 3: each level is a single orbit
UU = lat.hyperbolic_plane(2)
for orb in lat.orbit_partition(UU, 3, 2):
    print(orb.pontrjagin, len(orb.classes))

# mod 2 the reflections act as transvections; U + U is too small for them to be transitive
print([(o.pontrjagin, len(o.classes)) for o in lat.orbit_partition(UU, 2, 2)])
print([(o.pontrjagin, len(o.classes)) for o in lat.orbit_partition(lat.hyperbolic_plane(3), 2, 1)])
