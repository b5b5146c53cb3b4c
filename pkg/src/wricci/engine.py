"""Chern curvature tensor and its contractions at a point."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .config import DEFAULT_TOLERANCES
from .errors import NonRealResult, NotHermitian, SubspaceNotOrthonormal, ZeroVector
from .tensor_core import (
    MetricField,
    as_direction,
    check_hermitian,
    hermitian_part,
    invert_hermitian,
    metric_jet,
    norm_sq,
    unitary_frame,
)

RICCI_KINDS = (1, 2, 3, 4)

# contraction patterns: Ginv[q, p] pairs with the (p, qbar) slots of R_{i jbar k lbar}
_RICCI_EINSUM = {
    1: "lk,ijkl->ij",  # g^{k lbar} R_{i jbar k lbar}
    2: "ji,ijkl->kl",  # g^{i jbar} R_{i jbar k lbar}
    3: "li,ijkl->kj",  # g^{i lbar} R_{i jbar k lbar}
    4: "jk,ijkl->il",  # g^{k jbar} R_{i jbar k lbar}
}


@dataclass(frozen=True)
class CurvatureTensor:
    """``R[i, j, k, l] = R_{i jbar k lbar}`` together with the metric at the point."""

    R: np.ndarray
    g: np.ndarray
    g_inv: np.ndarray
    point: Optional[np.ndarray] = None

    @property
    def dim(self) -> int:
        return self.g.shape[0]

    @classmethod
    def from_components(cls, R, g, point=None) -> "CurvatureTensor":
        g = hermitian_part(check_hermitian(np.asarray(g, dtype=complex), tol=1e-9))
        return cls(R=np.asarray(R, dtype=complex), g=g, g_inv=invert_hermitian(g), point=point)

    def in_frame(self, frame: np.ndarray) -> np.ndarray:
        """Components ``R(e_a, ebar_b, e_c, ebar_d)`` for frame columns ``e``."""
        fb = np.conj(frame)
        return np.einsum("ijkl,ia,jb,kc,ld->abcd", self.R, frame, fb, frame, fb)

    def quartic(self, x: np.ndarray) -> complex:
        xb = np.conj(x)
        return complex(np.einsum("ijkl,i,j,k,l->", self.R, x, xb, x, xb))

    def pairing_violation(self) -> float:
        swapped = np.conj(np.transpose(self.R, (1, 0, 3, 2)))
        return float(np.max(np.abs(self.R - swapped), initial=0.0))

    def whitened(self) -> "CurvatureTensor":
        """The same tensor expressed in a g-unitary frame (so ``g = I``)."""
        frame = unitary_frame(self.g)
        eye = np.eye(self.dim, dtype=complex)
        return CurvatureTensor(R=self.in_frame(frame), g=eye, g_inv=eye, point=self.point)


def chern_curvature(mf: MetricField, z, h: Optional[float] = None, analytic: bool = True) -> CurvatureTensor:
    """``R_{i jbar k lbar} = -d_i dbar_j g_{k lbar} + g^{p qbar} d_i g_{k qbar} dbar_j g_{p lbar}``."""
    z = mf.check_point(z)
    jet = metric_jet(mf, z, h=h, analytic=analytic)
    g_inv = invert_hermitian(jet.g)
    R = -jet.ddg + np.einsum("ikq,qp,jpl->ijkl", jet.dg, g_inv, jet.dgbar)
    R = 0.5 * (R + np.conj(np.transpose(R, (1, 0, 3, 2))))
    return CurvatureTensor(R=R, g=jet.g, g_inv=g_inv, point=z)


def ricci(T: CurvatureTensor, kind: int = 1) -> np.ndarray:
    """Chern-Ricci contraction of the given kind (1..4).

    Kinds 1 and 2 are Hermitian; kinds 3 and 4 are conjugate transposes of
    each other and need not be Hermitian for non-Kahler-like tensors.
    """
    if kind not in _RICCI_EINSUM:
        raise ValueError(f"Ricci kind must be one of {RICCI_KINDS}, got {kind!r}")
    out = np.einsum(_RICCI_EINSUM[kind], T.g_inv, T.R)
    return hermitian_part(out) if kind in (1, 2) else out


def _real(value: complex, tol: float = DEFAULT_TOLERANCES.imaginary, what: str = "value") -> float:
    value = complex(value)
    if abs(value.imag) > tol * max(1.0, abs(value.real)):
        raise NonRealResult(f"{what} has imaginary part {value.imag:.3e}")
    return value.real


def scalar(T: CurvatureTensor) -> float:
    """Chern scalar curvature ``g^{i jbar} g^{k lbar} R_{i jbar k lbar}``."""
    return _real(np.einsum("ji,lk,ijkl->", T.g_inv, T.g_inv, T.R), what="Chern scalar")


def altered_scalar(T: CurvatureTensor) -> float:
    """``g^{i lbar} g^{k jbar} R_{i jbar k lbar}``."""
    return _real(np.einsum("li,jk,ijkl->", T.g_inv, T.g_inv, T.R), what="altered scalar")


def ricci_form(T: CurvatureTensor, X, kind: int = 1) -> float:
    """``Ric^(k)(X, Xbar)``; real part for kinds 3 and 4."""
    X = as_direction(X)
    return float(np.real(np.einsum("ab,a,b->", ricci(T, kind), X, np.conj(X))))


def hsc(T: CurvatureTensor, X) -> float:
    """Holomorphic sectional curvature ``R(X, Xbar, X, Xbar) / |X|_g^4``."""
    X = as_direction(X)
    nx = norm_sq(T.g, X)
    return _real(T.quartic(X), what="R(X,X,X,X)") / (nx * nx)


def _check_orthonormal(T: CurvatureTensor, basis: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    basis = np.asarray(basis, dtype=complex)
    if basis.ndim == 1:
        basis = basis[:, None]
    if basis.shape[0] != T.dim or basis.shape[1] > T.dim:
        raise SubspaceNotOrthonormal(f"basis of shape {basis.shape} does not fit dimension {T.dim}")
    gram = basis.T @ T.g @ np.conj(basis)
    if np.max(np.abs(gram - np.eye(basis.shape[1])), initial=0.0) > tol:
        raise SubspaceNotOrthonormal("subspace basis is not g-orthonormal")
    return basis


def k_scalar(T: CurvatureTensor, basis: np.ndarray) -> float:
    """Scalar curvature of ``R`` restricted to the span of the g-orthonormal columns of ``basis``."""
    rf = T.in_frame(_check_orthonormal(T, basis))
    return _real(np.einsum("aabb->", rf), what="k-scalar")


def altered_k_scalar(T: CurvatureTensor, basis: np.ndarray) -> float:
    rf = T.in_frame(_check_orthonormal(T, basis))
    return _real(np.einsum("abba->", rf), what="altered k-scalar")


def qobc_numerator(T: CurvatureTensor, frame: np.ndarray, v) -> float:
    rf = T.in_frame(_check_orthonormal(T, frame))
    v = np.asarray(v, dtype=float)
    diag = np.real(np.einsum("aacc->ac", rf))
    diff = v[:, None] - v[None, :]
    return float(np.sum(diag * diff * diff))


def qobc_frame(T: CurvatureTensor, frame: np.ndarray, v) -> float:
    """Quadratic orthogonal bisectional curvature for a unitary frame and real ``v``."""
    v = np.asarray(v, dtype=float)
    if v.shape != (T.dim,) or not np.any(v != 0):
        raise ZeroVector("v must be a nonzero real vector of length n")
    return qobc_numerator(T, frame, v) / float(v @ v)


def qobc_min(T: CurvatureTensor, frame: np.ndarray) -> float:
    """Minimum of ``qobc_frame`` over unit ``v`` for a fixed frame."""
    rf = T.in_frame(_check_orthonormal(T, frame))
    w = np.real(np.einsum("aacc->ac", rf))
    w = w + w.T
    lap = np.diag(w.sum(axis=1)) - w
    return float(np.linalg.eigvalsh(lap)[0])


def qobc_weitzenbock(T: CurvatureTensor, rho: np.ndarray, frame: Optional[np.ndarray] = None) -> float:
    """Weitzenbock form of the QOBC evaluated on a Hermitian matrix ``rho``.

    ``rho`` holds frame components ``rho[i, k] = rho_{i kbar}``; the frame
    defaults to :func:`unitary_frame`.  The first sum uses the diagonal
    frame Ricci components ``R_{i ibar}`` (first Chern-Ricci).
    """
    rho = check_hermitian(np.asarray(rho, dtype=complex), tol=1e-10)
    if rho.shape != (T.dim, T.dim):
        raise NotHermitian(f"rho must be {T.dim}x{T.dim}")
    frame = unitary_frame(T.g) if frame is None else _check_orthonormal(T, frame)
    rf = T.in_frame(frame)
    ric_diag = np.einsum("iikk->i", rf)
    n = T.dim
    first = np.einsum("i,ki,ik->", ric_diag, rho, rho)
    rdiag = np.diag(rho)
    second = np.einsum("iijj,i,j->", rf, rdiag, rdiag)
    # sum over i != l or k != j: drop the i == l and k == j block
    full = np.einsum("ilkj,li,jk->", rf, rho, rho)
    excluded = sum(rf[i, i, k, k] * rho[i, i] * rho[k, k] for i in range(n) for k in range(n))
    return _real(first - second - (full - excluded), tol=1e-8, what="QOBC")


@dataclass(frozen=True)
class KahlerLikeReport:
    passed: bool
    max_violation: float
    tol: float

    def __bool__(self) -> bool:
        return self.passed


def kahler_like_check(T: CurvatureTensor, tol: float = DEFAULT_TOLERANCES.kahler_like) -> KahlerLikeReport:
    """Test ``R_{i jbar k lbar} = R_{k jbar i lbar} = R_{i lbar k jbar}``.

    The violation is measured on g-unitary frame components, so the verdict
    does not depend on how the chart is scaled.
    """
    R = T.in_frame(unitary_frame(T.g))
    v1 = np.max(np.abs(R - np.transpose(R, (2, 1, 0, 3))), initial=0.0)
    v2 = np.max(np.abs(R - np.transpose(R, (0, 3, 2, 1))), initial=0.0)
    worst = float(max(v1, v2))
    return KahlerLikeReport(passed=worst <= tol, max_violation=worst, tol=tol)


def space_form_tensor(c: float, g: np.ndarray, point=None) -> CurvatureTensor:
    """Kahler tensor of constant holomorphic sectional curvature ``c`` w.r.t. ``g``."""
    g = np.asarray(g, dtype=complex)
    R = 0.5 * c * (np.einsum("ij,kl->ijkl", g, g) + np.einsum("il,kj->ijkl", g, g))
    return CurvatureTensor.from_components(R, g, point=point)
