"""
Chern curvature of the Hopf metric g = 4 delta / |z|^2 on C^2 minus the origin.

The metric is Hermitian but not Kahler, so the four Chern-Ricci contractions
differ and the Kahler-like symmetry test fails.
"""
import numpy as np

from wricci import engine, models, weighted

mf = models.hopf(2)
z = np.array([1.0 + 0.5j, -0.7j])
T = engine.chern_curvature(mf, z)

# compare with the closed form, once with analytic and once with finite-difference jets
ref = models.hopf_curvature_tensor(z)
T_fd = engine.chern_curvature(mf, z, analytic=False)
print("closed-form error (analytic jets):", np.max(np.abs(T.R - ref)))
print("closed-form error (4th-order FD): ", np.max(np.abs(T_fd.R - ref)))

for k in (1, 2, 3, 4):
    print(f"Ric^({k}) =\n{np.round(engine.ricci(T, k), 6)}")

print("Chern scalar:  ", engine.scalar(T))
print("altered scalar:", engine.altered_scalar(T))
print("Kahler-like?   ", engine.kahler_like_check(T))

# holomorphic sectional curvature ranges over [0, 1/4]
lo = weighted.minimize_directions(T, (0, 1), kind=1).min_value
hi = weighted.max_over_directions(T, (0, 1), kind=1).min_value
print(f"HSC range: [{lo:.6f}, {hi:.6f}]")
