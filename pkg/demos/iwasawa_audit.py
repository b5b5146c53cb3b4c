"""
The Iwasawa metric: a balanced, Chern-flat Hermitian metric on C^3.

Every weighted curvature vanishes identically, so no cell of the weight
region alpha > 0 > beta, 3 alpha + 2 beta > 0 can be positive.
"""
import numpy as np

from wricci import audit, engine, models

mf = models.iwasawa()
rng = np.random.default_rng(0)
for _ in range(3):
    z = rng.normal(size=3) + 1j * rng.normal(size=3)
    print("max |R| (finite differences):", np.max(np.abs(engine.chern_curvature(mf, z, analytic=False).R)))

rep = audit.iwasawa_nonpositivity_audit(np.linspace(0.1, 2, 10), np.linspace(-2, -0.1, 10))
print(rep.as_dict())
