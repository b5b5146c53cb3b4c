"""
U(n)-invariant metrics g = f(r) I + f'(r) zbar z^T with r = |z|^2.

At p = (sqrt(r), 0, ..., 0) the unitary-frame curvature reduces to three
numbers A, B, C, computed here from the profile and checked against the
engine.  The completeness report integrates sqrt(h/r) along a ray.
"""
import math

import numpy as np

from wricci import engine, models
from wricci.tensor_core import unitary_frame

for expr in ("1/(1+r)", "1+r", "exp(r/2)"):
    prof = models.UInvariantProfile.from_expression(expr)
    mf = models.u_invariant(prof, 3)
    print(f"f(r) = {expr}")
    for r in (0.5, 2.0):
        abc = models.u_invariant_abc(prof, r)
        T = engine.chern_curvature(mf, [math.sqrt(r), 0, 0])
        rf = T.in_frame(unitary_frame(T.g)).real
        print(
            f"  r={r}: A={abc.A:+.6f} B={abc.B:+.6f} C={abc.C:+.6f}"
            f"   engine: {rf[0, 0, 0, 0]:+.6f} {rf[0, 0, 1, 1]:+.6f} {rf[1, 1, 1, 1]:+.6f}"
        )
    rep = models.completeness_report(prof, 1e6)
    print(f"  ray length to r=1e6: {rep.integral_estimate:.4f} ({rep.divergence_heuristic})")
