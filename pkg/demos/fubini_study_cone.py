"""
Positivity cone of the weighted orthogonal Ricci curvature on CP^2.

Fubini-Study has Ric = 3g and HSC = 2, so alpha*Ric + beta*HSC is the
constant 3 alpha + 2 beta and the positive cells form a half-plane.
"""
import numpy as np

from wricci import cone_scan, models

mf = models.fubini_study(2)
alphas = np.linspace(-2, 2, 17)
betas = np.linspace(-2, 2, 17)
cmap = cone_scan(mf, [np.array([0.4, 0.2j])], alphas, betas, kind="kahler", seed=0)

symbol = {"positive": "+", "negative": "-", "degenerate": "0", "indefinite": "~", None: " "}
print("rows: beta from 2 down to -2, columns: alpha from -2 to 2; (0, 0) is left blank")
for j in reversed(range(len(betas))):
    print(f"{betas[j]:5.2f} " + "".join(symbol[cmap.classification[i, j]] for i in range(len(alphas))))

for label in ("positive", "negative", "degenerate", "indefinite"):
    print(f"{label:>10}: {cmap.count(label)}")
