"""Weighted orthogonal Ricci curvature, direction-sphere extrema and cone scans.

For weights ``(alpha, beta)`` and a (1,0) direction ``X``::

    Ric_{alpha,beta}^{(k)}(X) = alpha * Ric^(k)(X, Xbar) / |X|^2 + beta * HSC(X)

Extrema over directions are computed on the projective sphere (unit vectors
modulo phase) in a g-unitary frame, by multistart local search in charts
orthogonal to the current iterate.
"""

from __future__ import annotations

import logging
import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

import numpy as np
from scipy import optimize, special
from scipy.stats import qmc

from .config import DEFAULT_TOLERANCES
from .engine import (
    CurvatureTensor,
    altered_k_scalar,
    chern_curvature,
    hsc,
    k_scalar,
    kahler_like_check,
    qobc_min,
    ricci,
    ricci_form,
    scalar,
)
from .errors import OptimizationDivergence, SubspaceNotOrthonormal
from .tensor_core import MetricField, as_direction, norm_sq, random_unitary, unitary_frame

log = logging.getLogger(__name__)

Kind = Union[int, str]


@dataclass(frozen=True)
class WeightPair:
    alpha: float
    beta: float

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and math.isfinite(self.beta)):
            raise ValueError("weights must be finite")
        if self.alpha == 0 and self.beta == 0:
            raise ValueError("weights must not both vanish")

    @classmethod
    def coerce(cls, w) -> "WeightPair":
        if isinstance(w, WeightPair):
            return w
        a, b = w
        return cls(float(a), float(b))

    def scaled(self, t: float) -> "WeightPair":
        return WeightPair(t * self.alpha, t * self.beta)


def _resolve_kind(T: CurvatureTensor, kind: Kind) -> int:
    if kind == "kahler":
        report = kahler_like_check(T)
        if not report.passed:
            warnings.warn(
                f"tensor is not Kahler-like (violation {report.max_violation:.3g}); using Ricci kind 1",
                stacklevel=3,
            )
        return 1
    if kind not in (1, 2, 3, 4):
        raise ValueError(f"kind must be 1..4 or 'kahler', got {kind!r}")
    return int(kind)


def _effective_weights(w: WeightPair, convention: str) -> tuple:
    # "orthogonal": alpha * Ric^perp + beta * HSC with Ric^perp = Ric/|X|^2 - HSC
    if convention == "definition":
        return w.alpha, w.beta
    if convention == "orthogonal":
        return w.alpha, w.beta - w.alpha
    raise ValueError(f"unknown convention {convention!r}")


def weighted_orth_ricci(
    T: CurvatureTensor, w, X, kind: Kind = "kahler", convention: str = "definition"
) -> float:
    """``alpha * Ric^(k)(X, Xbar)/|X|_g^2 + beta * HSC(X)``.

    ``convention="orthogonal"`` instead evaluates
    ``alpha * Ric^perp(X) + beta * HSC(X)``.
    """
    w = WeightPair.coerce(w)
    X = as_direction(X)
    k = _resolve_kind(T, kind)
    a, b = _effective_weights(w, convention)
    return a * ricci_form(T, X, k) / norm_sq(T.g, X) + b * hsc(T, X)


# ------------------------------------------------------------ objective


class DirectionObjective:
    """Weighted curvature as a function of unnormalized frame coordinates.

    Works in a g-unitary frame so that the direction sphere is the Euclidean
    unit sphere; ``x`` packs real and imaginary parts, ``u = x[:n] + i x[n:]``.
    """

    def __init__(self, T: CurvatureTensor, a: float, b: float, kind: int):
        self.frame = unitary_frame(T.g)
        self.n = T.dim
        self.Rf = T.in_frame(self.frame)
        eye = np.eye(self.n, dtype=complex)
        q = ricci(CurvatureTensor(R=self.Rf, g=eye, g_inv=eye), kind)
        # Re(u^T Q ubar) only sees the Hermitian part
        self.Q = 0.5 * (q + np.conj(q.T))
        self.a = a
        self.b = b
        n = self.n
        # R_f[i, j, k, l] -> M[(i, k), (j, l)] for fast quartic contractions
        self._M = np.ascontiguousarray(self.Rf.transpose(0, 2, 1, 3).reshape(n * n, n * n))

    def _u(self, x):
        return x[: self.n] + 1j * x[self.n :]

    def value(self, x) -> float:
        u = self._u(x)
        ub = np.conj(u)
        nrm = float(np.real(np.vdot(u, u)))
        q = np.real(u @ self.Q @ ub)
        uu = np.outer(u, u).ravel()
        p = np.real(uu @ self._M @ np.conj(uu))
        return float(self.a * q / nrm + self.b * p / (nrm * nrm))

    def value_and_grad(self, x):
        u = self._u(x)
        ub = np.conj(u)
        nrm = float(np.real(np.vdot(u, u)))
        dq = self.Q.T @ u
        q = np.real(ub @ dq)
        n = self.n
        rb = (np.outer(u, u).ravel() @ self._M).reshape(n, n)
        dp = rb @ ub + rb.T @ ub
        p = 0.5 * np.real(ub @ dp)
        val = self.a * q / nrm + self.b * p / (nrm * nrm)
        dbar = self.a * (dq / nrm - q * u / nrm**2) + self.b * (dp / nrm**2 - 2 * p * u / nrm**3)
        grad = np.concatenate([2 * dbar.real, 2 * dbar.imag])
        return float(val), grad

    def values(self, U: np.ndarray) -> np.ndarray:
        """Vectorized evaluation at the rows of ``U`` (complex, shape (m, n))."""
        Ub = np.conj(U)
        nrm = np.real(np.einsum("ma,ma->m", U, Ub))
        q = np.real(np.einsum("mb,mb->m", U @ self.Q, Ub))
        uu = (U[:, :, None] * U[:, None, :]).reshape(len(U), -1)
        p = np.real(np.einsum("mb,mb->m", uu @ self._M, np.conj(uu)))
        return self.a * q / nrm + self.b * p / (nrm * nrm)

    def values_and_grads(self, X: np.ndarray):
        """Vectorized :meth:`value_and_grad` over the rows of real ``X``."""
        n = self.n
        U = X[:, :n] + 1j * X[:, n:]
        Ub = np.conj(U)
        nrm = np.real(np.einsum("ma,ma->m", U, Ub))[:, None]
        dq = U @ self.Q
        q = np.real(np.einsum("ma,ma->m", Ub, dq))[:, None]
        uu = np.einsum("mi,mk->mik", U, U).reshape(len(U), n * n)
        rb = (uu @ self._M).reshape(len(U), n, n)
        dp = np.einsum("mjl,ml->mj", rb, Ub) + np.einsum("mjl,mj->ml", rb, Ub)
        p = 0.5 * np.real(np.einsum("ma,ma->m", Ub, dp))[:, None]
        val = self.a * q / nrm + self.b * p / nrm**2
        dbar = self.a * (dq / nrm - q * U / nrm**2) + self.b * (dp / nrm**2 - 2 * p * U / nrm**3)
        return val[:, 0], np.concatenate([2 * dbar.real, 2 * dbar.imag], axis=1)

    def to_direction(self, x) -> np.ndarray:
        u = self._u(np.asarray(x, dtype=float))
        u = u / np.linalg.norm(u)
        return self.frame @ u


def _horizontal_basis(x0: np.ndarray) -> np.ndarray:
    n2 = x0.shape[0]
    n = n2 // 2
    jx = np.concatenate([-x0[n:], x0[:n]])  # i * u as a real vector
    m = np.column_stack([x0, jx, np.eye(n2)])
    q, _ = np.linalg.qr(m)
    return q[:, 2:n2]


def _local_min(obj: DirectionObjective, x0: np.ndarray, gtol: float, max_rounds: int = 6):
    x = x0 / np.linalg.norm(x0)
    converged = False
    for _ in range(max_rounds):
        # the objective is invariant under x -> c x, so its gradient is already horizontal
        val, grad = obj.value_and_grad(x)
        if np.linalg.norm(grad) <= gtol:
            return val, x, True
        basis = _horizontal_basis(x)

        def fun(t, x=x, basis=basis):
            v, g = obj.value_and_grad(x + basis @ t)
            return v, basis.T @ g

        res = optimize.minimize(
            fun, np.zeros(basis.shape[1]), jac=True, method="BFGS", options={"gtol": gtol, "maxiter": 500}
        )
        step = res.x
        x = x + basis @ step
        x = x / np.linalg.norm(x)
        converged = bool(res.success) or np.linalg.norm(res.jac) <= 10 * gtol
        if np.linalg.norm(step) < 1e-9:
            break
    return obj.value(x), x, converged


@dataclass
class SphereMinResult:
    min_value: float
    argmin: np.ndarray
    n_starts: int
    converged: bool
    start_values: list = field(default_factory=list)


def _default_starts(n: int) -> int:
    return max(8 * (n - 1), 4)


def minimize_directions(
    T: CurvatureTensor,
    w,
    kind: Kind = "kahler",
    *,
    n_starts: Optional[int] = None,
    seed=0,
    gtol: float = 1e-10,
    convention: str = "definition",
) -> SphereMinResult:
    """Minimum of the weighted curvature over the g-unit direction sphere at a point."""
    w = WeightPair.coerce(w)
    k = _resolve_kind(T, kind)
    a, b = _effective_weights(w, convention)
    obj = DirectionObjective(T, a, b, k)
    n = T.dim
    n_starts = _default_starts(n) if n_starts is None else int(n_starts)
    rng = np.random.default_rng(seed)
    starts = rng.normal(size=(n_starts, 2 * n))

    starts /= np.linalg.norm(starts, axis=1, keepdims=True)
    # starts that are already stationary need no local search
    start_vals, start_grads = obj.values_and_grads(starts)
    stationary = np.linalg.norm(start_grads, axis=1) <= gtol

    best_val, best_x, any_conv, vals = math.inf, None, False, []
    for x0, v0, done in zip(starts, start_vals, stationary):
        if done:
            val, x, conv = float(v0), x0, True
        else:
            val, x, conv = _local_min(obj, x0, gtol)
        vals.append(val)
        any_conv = any_conv or conv
        if val < best_val:
            best_val, best_x = val, x
    if best_x is None or not math.isfinite(best_val):
        raise OptimizationDivergence("no start produced a finite minimum")
    if not any_conv:
        log.warning("direction search did not report convergence from any start")
    return SphereMinResult(best_val, obj.to_direction(best_x), n_starts, any_conv, vals)


def min_over_directions(mf: MetricField, z, w, kind: Kind = "kahler", **opts) -> SphereMinResult:
    return minimize_directions(chern_curvature(mf, z), w, kind, **opts)


def max_over_directions(T: CurvatureTensor, w, kind: Kind = "kahler", **opts) -> SphereMinResult:
    w = WeightPair.coerce(w)
    res = minimize_directions(T, w.scaled(-1.0), kind, **opts)
    res.min_value = -res.min_value
    res.start_values = [-v for v in res.start_values]
    return res


def _sobol(dim: int, m: int, seed) -> np.ndarray:
    """First ``m`` points of a scrambled Sobol sequence in ``[0, 1)^dim``."""
    bits = max(int(math.ceil(math.log2(max(m, 2)))), 1)
    return qmc.Sobol(d=dim, scramble=True, seed=seed).random_base2(bits)[:m]


def _sobol_gaussian(dim: int, m: int, seed) -> np.ndarray:
    pts = _sobol(dim, m, seed)
    return special.ndtri(np.clip(pts, 1e-12, 1 - 1e-12))


def dense_direction_oracle(
    T: CurvatureTensor,
    w,
    kind: Kind = "kahler",
    n_samples: int = 200_000,
    seed=0,
    convention: str = "definition",
    zoom_fraction: float = 0.5,
    n_centers: int = 4,
    zoom_levels: int = 3,
) -> tuple:
    """Derivative-free minimum over ``n_samples`` quasi-random directions.

    A first batch of scrambled-Sobol directions covers the whole sphere; the
    remaining ``zoom_fraction`` of the budget is spent on ``zoom_levels``
    rounds of quasi-random sampling in shrinking chart boxes, first around
    the ``n_centers`` best distinct samples, then around the running best.
    No gradients or local solvers are involved.  Returns
    ``(min_value, argmin_direction)``.
    """
    w = WeightPair.coerce(w)
    k = _resolve_kind(T, kind)
    a, b = _effective_weights(w, convention)
    obj = DirectionObjective(T, a, b, k)
    n = T.dim
    rng = np.random.default_rng(seed)
    n_global = n_samples - int(zoom_fraction * n_samples) if n > 1 else n_samples
    gauss = _sobol_gaussian(2 * n, n_global, rng)
    U = gauss[:, :n] + 1j * gauss[:, n:]
    U /= np.linalg.norm(U, axis=1)[:, None]
    vals = np.concatenate([obj.values(U[lo : lo + 50_000]) for lo in range(0, n_global, 50_000)])
    order = np.argsort(vals, kind="stable")
    best, arg = float(vals[order[0]]), U[order[0]]

    n_zoom = n_samples - n_global
    if n_zoom <= 0:
        return best, obj.frame @ arg
    # spacing of the global batch on the (2n-2)-dimensional projective sphere
    radius = 2.0 * n_global ** (-1.0 / (2 * n - 2))
    centers = []
    for idx in order[: 50 * n_centers]:
        u = U[idx]
        if all(1.0 - abs(np.vdot(c, u)) ** 2 > radius**2 for c in centers):
            centers.append(u)
        if len(centers) == n_centers:
            break
    per_level = n_zoom // zoom_levels
    for level in range(zoom_levels):
        targets = centers if level == 0 else [arg]
        for c in targets:
            z, zv = _zoom_batch(obj, c, radius, per_level // len(targets), rng)
            if zv < best:
                best, arg = zv, z
        radius *= 0.25
    return best, obj.frame @ arg


def _zoom_batch(obj: DirectionObjective, center: np.ndarray, radius: float, m: int, rng):
    n = obj.n
    x0 = np.concatenate([center.real, center.imag])
    basis = _horizontal_basis(x0)
    cube = _sobol(2 * n - 2, m, rng)
    X = x0[None, :] + (2.0 * cube - 1.0) @ basis.T * radius
    Z = X[:, :n] + 1j * X[:, n:]
    Z /= np.linalg.norm(Z, axis=1)[:, None]
    zv = obj.values(Z)
    i = int(np.argmin(zv))
    return Z[i], float(zv[i])


# ------------------------------------------------------------ cone scan

CLASSES = ("positive", "negative", "indefinite", "degenerate")


@dataclass
class ConeMap:
    """Sign classification of the weighted curvature on an (alpha, beta) grid.

    ``classification[i, j]`` refers to ``(alphas[i], betas[j])``.  Cells
    outside the scanned region hold ``None``.
    """

    alphas: np.ndarray
    betas: np.ndarray
    classification: np.ndarray
    min_values: np.ndarray
    max_values: np.ndarray
    witness_point: np.ndarray
    witness_direction: list

    def cells(self):
        for i, a in enumerate(self.alphas):
            for j, b in enumerate(self.betas):
                if self.classification[i, j] is not None:
                    yield i, j, float(a), float(b)

    def count(self, label: str) -> int:
        return int(sum(1 for i, j, *_ in self.cells() if self.classification[i, j] == label))


def _classify_cell(args):
    tensors, alpha, beta, kind, tol, seed, cell_index, n_starts = args
    w = WeightPair(alpha, beta)
    mins, maxs, dirs = [], [], []
    for p_index, T in enumerate(tensors):
        ss = np.random.SeedSequence([seed, cell_index, p_index])
        lo = minimize_directions(T, w, kind, seed=np.random.default_rng(ss), n_starts=n_starts)
        mins.append(lo.min_value)
        dirs.append(lo.argmin)
    if all(m > tol for m in mins):
        label = "positive"
    else:
        for p_index, T in enumerate(tensors):
            ss = np.random.SeedSequence([seed, cell_index, p_index, 1])
            hi = max_over_directions(T, w, kind, seed=np.random.default_rng(ss), n_starts=n_starts)
            maxs.append(hi.min_value)
        if all(m < -tol for m in maxs):
            label = "negative"
        elif any(abs(m) <= tol for m in mins + maxs):
            label = "degenerate"
        else:
            label = "indefinite"
    worst = int(np.argmin(mins))
    return label, min(mins), (max(maxs) if maxs else math.nan), worst, dirs[worst]


def cone_scan(
    tensors_or_field,
    points: Optional[Sequence] = None,
    alphas: Iterable[float] = (),
    betas: Iterable[float] = (),
    kind: Kind = "kahler",
    *,
    tol: float = DEFAULT_TOLERANCES.positivity,
    seed: int = 0,
    jobs: int = 1,
    region=None,
    n_starts: Optional[int] = None,
) -> ConeMap:
    """Classify each grid cell as positive / negative / indefinite / degenerate.

    ``tensors_or_field`` is either a :class:`MetricField` (evaluated at
    ``points``) or a sequence of precomputed :class:`CurvatureTensor`.  A cell
    is positive if the minimum over directions exceeds ``tol`` at every
    point, negative if the maximum is below ``-tol`` everywhere, degenerate if
    some extremum lies in the ``tol`` band and indefinite otherwise.
    ``region(alpha, beta)`` optionally restricts the scanned cells; the
    origin ``(0, 0)`` is never a weight pair and is always skipped.

    Results do not depend on ``jobs``: every cell seeds its own generator
    from ``(seed, cell index, point index)``.
    """
    if isinstance(tensors_or_field, MetricField):
        if not points:
            raise ValueError("cone_scan needs at least one point")
        tensors = [chern_curvature(tensors_or_field, p) for p in points]
    else:
        tensors = list(tensors_or_field)
    if not tensors:
        raise ValueError("cone_scan needs at least one point")
    alphas = np.asarray(list(alphas), dtype=float)
    betas = np.asarray(list(betas), dtype=float)
    shape = (alphas.size, betas.size)

    jobs_list, index = [], []
    for i, a in enumerate(alphas):
        for j, b in enumerate(betas):
            if (a == 0 and b == 0) or (region is not None and not region(a, b)):
                continue
            cell_index = i * betas.size + j
            jobs_list.append((tensors, float(a), float(b), kind, tol, seed, cell_index, n_starts))
            index.append((i, j))

    if jobs > 1 and len(jobs_list) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunk = max(1, len(jobs_list) // (4 * jobs))
            results = list(pool.map(_classify_cell, jobs_list, chunksize=chunk))
    else:
        results = [_classify_cell(args) for args in jobs_list]

    cls = np.full(shape, None, dtype=object)
    mins = np.full(shape, np.nan)
    maxs = np.full(shape, np.nan)
    wp = np.full(shape, -1, dtype=int)
    wd: list = [[None] * shape[1] for _ in range(shape[0])]
    for (i, j), (label, lo, hi, worst, direction) in zip(index, results):
        cls[i, j] = label
        mins[i, j] = lo
        maxs[i, j] = hi
        wp[i, j] = worst
        wd[i][j] = direction
    return ConeMap(alphas, betas, cls, mins, maxs, wp, wd)


# ------------------------------------------------------ sphere averages


def _subspace_basis(T: CurvatureTensor, basis) -> np.ndarray:
    if basis is None:
        return unitary_frame(T.g)
    basis = np.asarray(basis, dtype=complex)
    if basis.ndim == 1:
        basis = basis[:, None]
    gram = basis.T @ T.g @ np.conj(basis)
    if basis.shape[0] != T.dim or np.max(np.abs(gram - np.eye(basis.shape[1])), initial=0.0) > 1e-9:
        raise SubspaceNotOrthonormal("subspace basis is not g-orthonormal")
    return basis


def sphere_average_ricci(T: CurvatureTensor, basis=None, kind: int = 1) -> float:
    """Mean of ``Ric^(k)(X, Xbar)`` over unit X in the span of ``basis`` (default: all of T)."""
    basis = _subspace_basis(T, basis)
    q = ricci(T, kind)
    vals = np.real(np.einsum("ab,ap,bp->p", q, basis, np.conj(basis)))
    return float(np.mean(vals))


def sphere_average_hsc(T: CurvatureTensor, basis=None) -> float:
    """Mean HSC over unit X in the span of ``basis``: ``(Scal_p + altered Scal_p) / (p(p+1))``."""
    basis = _subspace_basis(T, basis)
    p = basis.shape[1]
    return (k_scalar(T, basis) + altered_k_scalar(T, basis)) / (p * (p + 1))


@dataclass(frozen=True)
class MonteCarloEstimate:
    mean: float
    stderr: float
    n_samples: int

    def agrees_with(self, exact: float, n_sigma: float = 3.0, floor: float = 1e-12) -> bool:
        return abs(self.mean - exact) <= n_sigma * self.stderr + floor


def monte_carlo_sphere_average(
    T: CurvatureTensor, w=(0.0, 1.0), kind: int = 1, basis=None, n_samples: int = 100_000, seed=0
) -> MonteCarloEstimate:
    """Monte Carlo mean of the weighted curvature over unit directions in a subspace.

    Samples standard complex normal coefficients in a g-orthonormal basis,
    which is exactly uniform on the g-unit sphere after normalization.
    """
    w = WeightPair.coerce(w)
    basis = _subspace_basis(T, basis)
    rng = np.random.default_rng(seed)
    coeffs = rng.normal(size=(n_samples, basis.shape[1])) + 1j * rng.normal(size=(n_samples, basis.shape[1]))
    X = coeffs @ basis.T
    obj = DirectionObjective(T, w.alpha, w.beta, kind)
    # express X in the objective's whitened frame
    U = np.linalg.solve(obj.frame, X.T).T
    vals = obj.values(U)
    return MonteCarloEstimate(float(vals.mean()), float(vals.std(ddof=1) / math.sqrt(n_samples)), n_samples)


def average_identity_audit(T: CurvatureTensor, w, tol: float = 1e-8) -> dict:
    """Compare the sphere mean of the weighted curvature with its scalar-curvature expression.

    The right-hand side ``(alpha(n+1) + 2 beta) / (2n(n+1)) * Scal`` is
    evaluated with ``Scal`` read as the Chern scalar and as twice the Chern
    scalar; the report states which reading closes the identity.
    """
    w = WeightPair.coerce(w)
    n = T.dim
    like = kahler_like_check(T)
    if not like.passed:
        warnings.warn("average identity audited on a non-Kahler-like tensor", stacklevel=2)
    lhs = w.alpha * sphere_average_ricci(T) / 1.0 + w.beta * sphere_average_hsc(T)
    s = scalar(T)
    factor = (w.alpha * (n + 1) + 2 * w.beta) / (2 * n * (n + 1))
    readings = {"chern": factor * s, "twice_chern": factor * 2 * s}
    residuals = {k: abs(lhs - v) for k, v in readings.items()}
    closing = sorted(k for k, r in residuals.items() if r <= tol)
    return {
        "alpha": w.alpha,
        "beta": w.beta,
        "n": n,
        "kahler_like": like.passed,
        "lhs": lhs,
        "chern_scalar": s,
        "rhs": readings,
        "residuals": residuals,
        "closes_under": closing,
    }


def weight_necessity_audit(
    source,
    w,
    points: Optional[Sequence] = None,
    tol: float = DEFAULT_TOLERANCES.positivity,
    n_frames: int = 32,
    seed: int = 0,
) -> dict:
    """Empirical check that nonnegative weighted curvature and QOBC force ``alpha(n+1) + 2beta >= 0``.

    ``source`` is a :class:`MetricField` evaluated at ``points`` or a
    sequence of curvature tensors.  Nonnegativity of both curvatures is
    sampled (optimized minimum over directions; QOBC minimum over random
    unitary frames).  A returned counterexample candidate indicates an
    engine problem.
    """
    if isinstance(source, MetricField):
        tensors = [chern_curvature(source, p) for p in (points or [])]
    else:
        tensors = list(source)
    w = WeightPair.coerce(w)
    rng = np.random.default_rng(seed)
    rows = []
    for T in tensors:
        n = T.dim
        ric_min = minimize_directions(T, w, "kahler", seed=rng).min_value
        base = unitary_frame(T.g)
        frames = [base] + [base @ random_unitary(n, rng) for _ in range(n_frames)]
        q_min = min(qobc_min(T, fr) for fr in frames)
        rows.append({"weighted_min": ric_min, "qobc_min": q_min})
    n = tensors[0].dim if tensors else 0
    margin = w.alpha * (n + 1) + 2 * w.beta
    hypotheses = bool(rows) and all(r["weighted_min"] >= -tol and r["qobc_min"] >= -tol for r in rows)
    degenerate = bool(rows) and all(abs(r["weighted_min"]) <= tol for r in rows)
    return {
        "alpha": w.alpha,
        "beta": w.beta,
        "n": n,
        "points": rows,
        "hypotheses_hold": hypotheses,
        "degenerate": degenerate,
        "weight_margin": margin,
        "consistent": (not hypotheses) or margin >= -tol,
        # an identically vanishing curvature satisfies the hypotheses trivially
        "counterexample_candidate": hypotheses and not degenerate and margin < -tol,
    }
