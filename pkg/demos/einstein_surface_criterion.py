"""
Negativity test for holomorphic sectional curvature on Kahler-Einstein surfaces,
plus the closed-form weight conditions and the diameter bound.
"""
import numpy as np

from wricci import audit, engine
from wricci.tensor_core import random_hermitian_pd

rng = np.random.default_rng(1)
for c in (-3.0, -0.5, 0.0, 1.5):
    T = engine.space_form_tensor(c, random_hermitian_pd(2, rng))
    v = audit.cheung_criterion(T)
    print(
        f"c={c:+.1f}  lambda={v.lam:+.3f}  2*lambda - R_1111={v.orth_ricci:+.3f}  "
        f"|R_1212|={abs(v.r1212):.1e}  negative HSC: {v.conclusion}  (max HSC {audit.max_hsc(T):+.3f})"
    )

print()
for a, b in [(1, -1), (1, -1.5), (2, -1)]:
    print(f"({a}, {b}) projectivity:", audit.projectivity_condition(a, b))
print("Hodge p=2 at (1, -1):", audit.hodge_vanishing_condition(1, -1, 2))
print("diameter bound (1, -0.5, n=2, lambda=1):", audit.diameter_bound(1, -0.5, 2, 1))
