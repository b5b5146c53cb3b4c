"""Built-in Hermitian metric models with closed-form curvature data.

The models double as oracles for the curvature engine: the Hopf metric has a
closed-form Chern tensor, the U(n)-invariant family has closed-form frame
components ``(A, B, C)``, Fubini-Study has constant holomorphic sectional
curvature 2 and the Iwasawa metric is Chern-flat.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np
from scipy import integrate

from .errors import ChartDomainViolation, ConfigError, ProfileInvalid, QuadratureFailure
from .tensor_core import JetOfMetric, MetricField

R_MIN = 1e-4


def _numeric_derivative(fn: Callable[[float], float], r: float) -> float:
    step = 1e-4 * max(1.0, abs(r))
    if r - 2 * step < 0.0:
        # forward 4th-order stencil near the boundary r = 0
        c = (-25.0, 48.0, -36.0, 16.0, -3.0)
        return sum(ck * fn(r + k * step) for k, ck in enumerate(c)) / (12.0 * step)
    return (fn(r - 2 * step) - 8 * fn(r - step) + 8 * fn(r + step) - fn(r + 2 * step)) / (12.0 * step)


@dataclass(frozen=True)
class UInvariantProfile:
    """Radial profile ``f(r)`` of a U(n)-invariant metric on C^n.

    Derivatives ``df``, ``d2f``, ``d3f`` may be omitted, in which case they
    are finite-differenced from the next-lower one.
    """

    f: Callable[[float], float]
    df: Optional[Callable[[float], float]] = None
    d2f: Optional[Callable[[float], float]] = None
    d3f: Optional[Callable[[float], float]] = None
    label: str = "custom"

    @classmethod
    def from_expression(cls, expr: str) -> "UInvariantProfile":
        """Build a profile from a sympy-parsable expression in ``r``."""
        import sympy

        r = sympy.Symbol("r", nonnegative=True)
        try:
            e = sympy.sympify(expr, locals={"r": r})
        except (sympy.SympifyError, SyntaxError, TypeError) as exc:
            raise ConfigError(f"cannot parse profile {expr!r}") from exc
        if e.free_symbols - {r}:
            raise ConfigError(f"profile {expr!r} may only depend on r")
        derivs = [e]
        for _ in range(3):
            derivs.append(sympy.diff(derivs[-1], r))
        fns = [_scalar(sympy.lambdify(r, d, "math")) for d in derivs]
        return cls(*fns, label=expr)

    def value(self, r: float) -> float:
        return float(self.f(r))

    def d1(self, r: float) -> float:
        return float(self.df(r)) if self.df is not None else _numeric_derivative(self.f, r)

    def d2(self, r: float) -> float:
        return float(self.d2f(r)) if self.d2f is not None else _numeric_derivative(self.d1, r)

    def d3(self, r: float) -> float:
        return float(self.d3f(r)) if self.d3f is not None else _numeric_derivative(self.d2, r)

    def h(self, r: float) -> float:
        return self.value(r) + r * self.d1(r)

    def dh(self, r: float) -> float:
        return 2 * self.d1(r) + r * self.d2(r)

    def d2h(self, r: float) -> float:
        return 3 * self.d2(r) + r * self.d3(r)

    def xi(self, r: float) -> float:
        return -r * self.dh(r) / self.h(r)

    def dxi(self, r: float) -> float:
        h, dh = self.h(r), self.dh(r)
        return -(dh + r * self.d2h(r)) / h + r * dh * dh / (h * h)

    def validate(self, r: float) -> None:
        if not self.value(r) > 0:
            raise ProfileInvalid(f"f({r}) = {self.value(r)} is not positive")
        if not self.h(r) > 0:
            raise ProfileInvalid(f"h({r}) = {self.h(r)} is not positive")


def _scalar(fn):
    return lambda x: float(fn(x))


def fs_profile() -> UInvariantProfile:
    return UInvariantProfile(
        f=lambda r: 1.0 / (1.0 + r),
        df=lambda r: -1.0 / (1.0 + r) ** 2,
        d2f=lambda r: 2.0 / (1.0 + r) ** 3,
        d3f=lambda r: -6.0 / (1.0 + r) ** 4,
        label="1/(1+r)",
    )


def flat_profile() -> UInvariantProfile:
    zero = lambda r: 0.0  # noqa: E731
    return UInvariantProfile(f=lambda r: 1.0, df=zero, d2f=zero, d3f=zero, label="1")


# ---------------------------------------------------------------- models


def flat(n: int) -> MetricField:
    if n < 1:
        raise ValueError("n must be >= 1")
    eye = np.eye(n, dtype=complex)
    zeros3 = np.zeros((n, n, n), dtype=complex)
    zeros4 = np.zeros((n, n, n, n), dtype=complex)

    return MetricField(
        name="flat",
        dim=n,
        metric=lambda z: eye.copy(),
        jet=lambda z: JetOfMetric(eye.copy(), zeros3.copy(), zeros4.copy()),
        kahler_expected=True,
        balanced_expected=True,
        params={"n": n},
    )


def hopf(n: int) -> MetricField:
    """``g = 4 delta / |z|^2`` on C^n minus the origin."""
    if n < 2:
        raise ValueError("the Hopf model needs n >= 2")
    eye = np.eye(n)

    def metric(z):
        return 4.0 / np.vdot(z, z).real * eye.astype(complex)

    def jet(z):
        r = np.vdot(z, z).real
        zb = np.conj(z)
        dg = -4.0 / r**2 * np.einsum("i,kl->ikl", zb, eye)
        scal = 4.0 * (-eye / r**2 + 2.0 * np.outer(zb, z) / r**3)
        ddg = np.einsum("ij,kl->ijkl", scal, eye)
        return JetOfMetric(metric(z), dg.astype(complex), ddg.astype(complex))

    return MetricField(
        name="hopf",
        dim=n,
        metric=metric,
        jet=jet,
        domain=lambda z: np.vdot(z, z).real > 0.0,
        params={"n": n},
    )


def hopf_curvature_closed_form(z, i: int, j: int, k: int, l: int) -> complex:
    """Chern tensor component ``R_{i jbar k lbar}`` of :func:`hopf` (zero-based)."""
    z = np.asarray(z, dtype=complex)
    r = np.vdot(z, z).real
    if r == 0.0:
        raise ChartDomainViolation("the Hopf metric is undefined at z = 0")
    if k != l:
        return 0j
    return complex(4.0 * ((i == j) * r - z[j] * np.conj(z[i])) / r**3)


def hopf_curvature_tensor(z) -> np.ndarray:
    z = np.asarray(z, dtype=complex)
    n = z.shape[0]
    out = np.empty((n, n, n, n), dtype=complex)
    for idx in np.ndindex(out.shape):
        out[idx] = hopf_curvature_closed_form(z, *idx)
    return out


def u_invariant(profile: UInvariantProfile, n: int, name: str = "u_invariant") -> MetricField:
    """``g_{k lbar} = f(r) delta_kl + f'(r) zbar_k z_l`` with ``r = |z|^2``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    eye = np.eye(n)

    def metric(z):
        r = np.vdot(z, z).real
        profile.validate(r)
        zz = np.outer(np.conj(z), z)
        return profile.value(r) * eye + profile.d1(r) * 0.5 * (zz + np.conj(zz.T))

    def jet(z):
        r = np.vdot(z, z).real
        profile.validate(r)
        f1, f2, f3 = profile.d1(r), profile.d2(r), profile.d3(r)
        zb = np.conj(z)
        dg = (
            f1 * np.einsum("i,kl->ikl", zb, eye)
            + f2 * np.einsum("i,k,l->ikl", zb, zb, z)
            + f1 * np.einsum("k,il->ikl", zb, eye)
        )
        ddg = (
            f2 * np.einsum("i,j,kl->ijkl", zb, z, eye)
            + f1 * np.einsum("ij,kl->ijkl", eye, eye)
            + f3 * np.einsum("i,j,k,l->ijkl", zb, z, zb, z)
            + f2 * np.einsum("ij,k,l->ijkl", eye, zb, z)
            + f2 * np.einsum("j,k,il->ijkl", z, zb, eye)
            + f2 * np.einsum("i,jk,l->ijkl", zb, eye, z)
            + f1 * np.einsum("jk,il->ijkl", eye, eye)
        )
        return JetOfMetric(metric(z), dg.astype(complex), ddg.astype(complex))

    return MetricField(
        name=name,
        dim=n,
        metric=metric,
        jet=jet,
        kahler_expected=True,
        params={"n": n, "profile": profile.label},
    )


def fubini_study(n: int) -> MetricField:
    return u_invariant(fs_profile(), n, name="fubini_study")


def iwasawa() -> MetricField:
    """Metric on C^3 from the coframe ``{dz1, dz2, dz3 - z1 dz2}``."""

    def metric(z):
        z1 = z[0]
        return np.array(
            [[1.0, 0.0, 0.0], [0.0, 1.0 + abs(z1) ** 2, -z1], [0.0, -np.conj(z1), 1.0]],
            dtype=complex,
        )

    def jet(z):
        dg = np.zeros((3, 3, 3), dtype=complex)
        dg[0, 1, 1] = np.conj(z[0])
        dg[0, 1, 2] = -1.0
        ddg = np.zeros((3, 3, 3, 3), dtype=complex)
        ddg[0, 0, 1, 1] = 1.0
        return JetOfMetric(metric(z), dg, ddg)

    return MetricField(
        name="iwasawa",
        dim=3,
        metric=metric,
        jet=jet,
        balanced_expected=True,
        params={"n": 3},
    )


# ------------------------------------------------ U(n)-invariant closed forms


@dataclass(frozen=True)
class ABCComponents:
    A: float
    B: float
    C: float
    r: float


def integral_of_h(profile: UInvariantProfile, r: float, rtol: float = 1e-10) -> float:
    """``int_0^r h(s) ds`` by adaptive Gauss-Kronrod quadrature."""
    value, err = integrate.quad(profile.h, 0.0, r, epsabs=0.0, epsrel=rtol, limit=200)
    if err > max(rtol * abs(value), 1e-13):
        raise QuadratureFailure(f"quadrature of h on [0, {r}] did not converge (err {err:.3g})")
    return value


def u_invariant_abc(profile: UInvariantProfile, r: float, r_min: float = R_MIN) -> ABCComponents:
    """Frame curvature components at ``p = (sqrt(r), 0, ..., 0)``.

    ``A = R_{1111}``, ``B = R_{11ii}``, ``C = R_{iiii}`` (``i >= 2``) in the
    unitary frame ``e_1 = d_1/sqrt(h)``, ``e_k = d_k/sqrt(f)``.
    """
    if r <= r_min:
        raise ProfileInvalid(f"r = {r} must exceed r_min = {r_min}")
    profile.validate(r)
    f, h, xi = profile.value(r), profile.h(r), profile.xi(r)
    ih = integral_of_h(profile, r)
    a = profile.dxi(r) / h
    b = (r * h - (1.0 - xi) * ih) / (r * f) ** 2
    c = 2.0 * (ih - r * h) / (r * r * f * f)
    return ABCComponents(A=a, B=b, C=c, r=r)


def _or_inf(fn, r: float) -> float:
    try:
        return fn(r)
    except OverflowError:
        return math.inf


@dataclass
class CompletenessReport:
    f_positive: bool
    h_positive: bool
    integral_estimate: float
    divergence_heuristic: str
    dyadic_ratios: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "f_positive": self.f_positive,
            "h_positive": self.h_positive,
            "integral_estimate": self.integral_estimate,
            "divergence_heuristic": self.divergence_heuristic,
            "dyadic_ratios": list(self.dyadic_ratios),
        }


def completeness_report(profile: UInvariantProfile, r_max: float, samples: int = 400) -> CompletenessReport:
    """Numerical evidence for the completeness test of U(n)-invariant metrics.

    Checks ``f > 0`` and ``h > 0`` on a log-spaced sample of ``[0, r_max]``
    and estimates ``int_0^r_max sqrt(h/r) dr``.  Divergence is judged by the
    ratio of partial integrals over successive dyadic intervals; this is a
    heuristic and may answer ``inconclusive``.
    """
    if r_max <= 0:
        raise ValueError("r_max must be positive")
    rs = np.concatenate([[0.0], np.geomspace(min(1e-6, r_max / 10), r_max, samples)])
    fv = np.array([_or_inf(profile.value, r) for r in rs])
    hv = np.array([_or_inf(profile.h, r) for r in rs])
    f_pos = bool(np.all(fv > 0))
    h_pos = bool(np.all(hv > 0))
    if not (f_pos and h_pos):
        return CompletenessReport(f_pos, h_pos, math.nan, "inconclusive")
    if np.isinf(hv).any():
        # h overflows before r_max, so sqrt(h/r) is not integrable numerically
        return CompletenessReport(f_pos, h_pos, math.inf, "likely divergent")

    # substitute r = s^2 to remove the 1/sqrt(r) singularity at 0
    integrand = lambda s: 2.0 * math.sqrt(max(profile.h(s * s), 0.0))  # noqa: E731
    edges = [0.0, 1.0]
    while edges[-1] ** 2 < r_max:
        edges.append(edges[-1] * math.sqrt(2.0))
    edges[-1] = math.sqrt(r_max)
    if edges[-1] <= edges[-2]:
        edges.pop(-2)
    pieces = [integrate.quad(integrand, a, b, limit=200)[0] for a, b in zip(edges[:-1], edges[1:])]
    total = float(sum(pieces))

    # complete dyadic intervals [2^k, 2^(k+1)] in r beyond r = 1
    full = pieces[1:-1] if len(pieces) > 2 else []
    ratios = [b / a for a, b in zip(full[:-1], full[1:]) if a > 0]
    tail = ratios[-6:]
    if len(tail) < 3:
        verdict = "inconclusive"
    else:
        mean_ratio = float(np.mean(tail))
        if mean_ratio >= 0.98:
            verdict = "likely divergent"
        elif mean_ratio <= 0.9:
            verdict = "likely convergent"
        else:
            verdict = "inconclusive"
    return CompletenessReport(f_pos, h_pos, total, verdict, [float(x) for x in ratios])


# ------------------------------------------------------------- registry


def _u_invariant_from_params(n: int = 3, profile: str = "1/(1+r)", **_) -> MetricField:
    return u_invariant(UInvariantProfile.from_expression(profile), int(n))


MODEL_REGISTRY: dict = {
    "flat": lambda n=2, **_: flat(int(n)),
    "hopf": lambda n=2, **_: hopf(int(n)),
    "fubini_study": lambda n=2, **_: fubini_study(int(n)),
    "u_invariant": _u_invariant_from_params,
    "iwasawa": lambda **_: iwasawa(),
}


def build_model(name: str, **params) -> MetricField:
    try:
        factory = MODEL_REGISTRY[name]
    except KeyError:
        raise ConfigError(f"unknown model {name!r}; known: {sorted(MODEL_REGISTRY)}") from None
    return factory(**params)
