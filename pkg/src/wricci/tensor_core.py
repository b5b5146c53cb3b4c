"""Complex linear algebra and Wirtinger differentiation primitives.

Index conventions used throughout the package:

* A metric at a point is an ``(n, n)`` complex array ``G`` with
  ``G[k, l] = g_{k lbar}``; the pointwise inner product of (1,0) vectors is
  ``<X, Y> = sum_{kl} G[k, l] X_k conj(Y_l)``.
* Contraction with the inverse metric ``g^{p qbar}`` uses ``Ginv[q, p]``
  where ``Ginv = inv(G)``, so ``sum g^{p qbar} T_{p qbar} = trace(Ginv @ T)``.
* Indices are zero-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .config import DEFAULT_TOLERANCES
from .errors import (
    ChartDomainViolation,
    NotHermitian,
    NotPositiveDefinite,
    StencilFailure,
    ZeroVector,
)

# 4th-order central first-derivative stencil: offsets -2..2
_STENCIL_OFFSETS = (-2, -1, 1, 2)
_STENCIL_WEIGHTS = (1.0 / 12.0, -8.0 / 12.0, 8.0 / 12.0, -1.0 / 12.0)


@dataclass(frozen=True)
class JetOfMetric:
    """Metric value and its first and mixed second Wirtinger derivatives.

    ``dg[i]`` is ``dG/dz_i`` and ``ddg[i, j]`` is ``d^2 G / dz_i dzbar_j``;
    shapes ``(n, n, n)`` and ``(n, n, n, n)``.
    """

    g: np.ndarray
    dg: np.ndarray
    ddg: np.ndarray

    @property
    def dim(self) -> int:
        return self.g.shape[0]

    @property
    def dgbar(self) -> np.ndarray:
        """``dG/dzbar_j``, which is the conjugate transpose of ``dG/dz_j``."""
        return np.conj(np.transpose(self.dg, (0, 2, 1)))

    def reality_violation(self) -> float:
        swapped = np.conj(np.transpose(self.ddg, (1, 0, 3, 2)))
        return float(np.max(np.abs(self.ddg - swapped), initial=0.0))


@dataclass(frozen=True)
class MetricField:
    """A Hermitian metric on a single coordinate chart.

    ``metric`` maps a complex point to the ``(n, n)`` matrix ``g_{k lbar}``.
    ``jet`` optionally returns the analytic :class:`JetOfMetric`.
    """

    name: str
    dim: int
    metric: Callable[[np.ndarray], np.ndarray]
    jet: Optional[Callable[[np.ndarray], JetOfMetric]] = None
    domain: Callable[[np.ndarray], bool] = lambda z: True
    kahler_expected: bool = False
    balanced_expected: bool = False
    params: dict = field(default_factory=dict)

    def contains(self, z) -> bool:
        z = np.asarray(z, dtype=complex)
        return z.shape == (self.dim,) and bool(np.all(np.isfinite(z))) and bool(self.domain(z))

    def check_point(self, z) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        if not self.contains(z):
            raise ChartDomainViolation(f"point {z!r} outside the chart of {self.name}")
        return z

    def __call__(self, z) -> np.ndarray:
        return self.metric(self.check_point(z))


def hermitian_part(a: np.ndarray) -> np.ndarray:
    return 0.5 * (a + np.conj(a.T))


def check_hermitian(a: np.ndarray, tol: float = DEFAULT_TOLERANCES.hermitian) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotHermitian(f"expected a square matrix, got shape {a.shape}")
    scale = max(1.0, float(np.max(np.abs(a), initial=0.0)))
    if np.max(np.abs(a - np.conj(a.T)), initial=0.0) > tol * scale:
        raise NotHermitian("matrix is not Hermitian")
    return a


def _cholesky(g: np.ndarray) -> np.ndarray:
    g = hermitian_part(check_hermitian(g, tol=1e-8))
    try:
        return np.linalg.cholesky(g)
    except np.linalg.LinAlgError as exc:
        raise NotPositiveDefinite("metric is not positive definite") from exc


def invert_hermitian(g: np.ndarray) -> np.ndarray:
    """Inverse of a positive-definite Hermitian matrix via Cholesky."""
    chol = _cholesky(g)
    eye = np.eye(g.shape[0], dtype=complex)
    linv = np.linalg.solve(chol, eye)
    return hermitian_part(np.conj(linv.T) @ linv)


def unitary_frame(g: np.ndarray) -> np.ndarray:
    """Frame whose columns are g-orthonormal (1,0) vectors.

    Gram-Schmidt in coordinate order, so the first column is
    ``d/dz_1 / |d/dz_1|`` and the frame is upper triangular.  Satisfies
    ``F.T @ G @ F.conj() == I``.
    """
    g = np.asarray(g, dtype=complex)
    chol = _cholesky(np.conj(g))
    eye = np.eye(g.shape[0], dtype=complex)
    return np.conj(np.linalg.solve(chol, eye).T)


def inner(g: np.ndarray, x: np.ndarray, y: np.ndarray) -> complex:
    return complex(np.einsum("kl,k,l->", g, x, np.conj(y)))


def norm_sq(g: np.ndarray, x: np.ndarray) -> float:
    return float(np.real(inner(g, x, x)))


def as_direction(x) -> np.ndarray:
    x = np.asarray(x, dtype=complex)
    if x.ndim != 1 or not np.any(x != 0) or not np.all(np.isfinite(x)):
        raise ZeroVector("direction must be a finite nonzero vector")
    return x


def random_hermitian_pd(n: int, rng: np.random.Generator, spread: float = 1.0) -> np.ndarray:
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return hermitian_part(a @ np.conj(a.T) * spread + np.eye(n))


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(a)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def _real_offset(n: int, axis: int, step: float) -> np.ndarray:
    dz = np.zeros(n, dtype=complex)
    if axis < n:
        dz[axis] = step
    else:
        dz[axis - n] = 1j * step
    return dz


def finite_difference_jet(mf: MetricField, z, h: Optional[float] = None) -> JetOfMetric:
    """Jet of ``mf`` at ``z`` from 4th-order central differences.

    Mixed second derivatives are tensor products of the first-derivative
    stencil along pairs of real coordinates, combined through
    ``d/dz = (d/dx - i d/dy) / 2``.
    """
    z = mf.check_point(z)
    n = mf.dim
    h = DEFAULT_TOLERANCES.fd_step if h is None else h
    cache: dict = {}

    def g_at(offsets: tuple) -> np.ndarray:
        key = tuple(sorted(offsets))
        if key not in cache:
            pt = z.copy()
            for axis, s in offsets:
                pt = pt + _real_offset(n, axis, s * h)
            if not mf.contains(pt):
                raise StencilFailure(f"stencil point {pt!r} leaves the chart of {mf.name}")
            cache[key] = np.asarray(mf.metric(pt), dtype=complex)
        return cache[key]

    def merge(*pairs):
        acc: dict = {}
        for axis, s in pairs:
            acc[axis] = acc.get(axis, 0) + s
        return tuple((a, s) for a, s in acc.items() if s != 0)

    first = np.zeros((2 * n, n, n), dtype=complex)
    for a in range(2 * n):
        for s, w in zip(_STENCIL_OFFSETS, _STENCIL_WEIGHTS):
            first[a] += w * g_at(merge((a, s)))
    first /= h

    second = np.zeros((2 * n, 2 * n, n, n), dtype=complex)
    for a in range(2 * n):
        for b in range(a, 2 * n):
            acc = np.zeros((n, n), dtype=complex)
            for s, ws in zip(_STENCIL_OFFSETS, _STENCIL_WEIGHTS):
                for t, wt in zip(_STENCIL_OFFSETS, _STENCIL_WEIGHTS):
                    acc += ws * wt * g_at(merge((a, s), (b, t)))
            second[a, b] = second[b, a] = acc / (h * h)

    dx, dy = first[:n], first[n:]
    dg = 0.5 * (dx - 1j * dy)
    xx, xy = second[:n, :n], second[:n, n:]
    yx, yy = second[n:, :n], second[n:, n:]
    # (d_xi - i d_yi)(d_xj + i d_yj) / 4
    ddg = 0.25 * (xx + yy + 1j * (xy - yx))
    ddg = 0.5 * (ddg + np.conj(np.transpose(ddg, (1, 0, 3, 2))))
    return JetOfMetric(g=hermitian_part(g_at(())), dg=dg, ddg=ddg)


def metric_jet(mf: MetricField, z, h: Optional[float] = None, analytic: bool = True) -> JetOfMetric:
    """Jet of the metric at ``z``; analytic when the model provides one."""
    z = mf.check_point(z)
    if analytic and mf.jet is not None:
        jet = mf.jet(z)
        ddg = 0.5 * (jet.ddg + np.conj(np.transpose(jet.ddg, (1, 0, 3, 2))))
        return JetOfMetric(g=hermitian_part(jet.g), dg=jet.dg, ddg=ddg)
    return finite_difference_jet(mf, z, h)
