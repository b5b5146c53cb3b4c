"""Verification battery behind ``wricci verify``.

Every check compares a computed quantity with an independent closed form and
reports the residual against the ``check`` tolerance (default 1e-6).
"""

from __future__ import annotations

import math
import warnings

import numpy as np

from . import audit, engine, models, weighted
from .errors import ConfigError
from .tensor_core import random_hermitian_pd, unitary_frame

GROUPS = ("oracles", "kahler_like", "averaging", "weitzenbock", "frame_lines", "conditions", "iwasawa")


def _result(name, group, residual, tol, note=""):
    return {
        "name": name,
        "group": group,
        "residual": float(residual),
        "tolerance": float(tol),
        "passed": bool(residual <= tol),
        "note": note,
    }


def _flag(name, group, ok, note=""):
    return {"name": name, "group": group, "residual": None, "tolerance": None, "passed": bool(ok), "note": note}


def _points(rng, n, count, scale=1.0):
    return [scale * (rng.normal(size=n) + 1j * rng.normal(size=n)) for _ in range(count)]


def _oracles(tol, rng):
    out = []
    for n in (2, 3):
        mf = models.hopf(n)
        worst = 0.0
        for p in _points(rng, n, 10):
            T = engine.chern_curvature(mf, p, analytic=False)
            worst = max(worst, float(np.max(np.abs(T.R - models.hopf_curvature_tensor(p)))))
        out.append(_result(f"hopf_closed_form_n{n}", "oracles", worst, tol, "finite-difference engine vs closed form"))
    prof = models.fs_profile()
    worst = 0.0
    for r in (0.1, 1.0, 10.0):
        abc = models.u_invariant_abc(prof, r)
        T = engine.chern_curvature(models.fubini_study(3), [math.sqrt(r), 0, 0], analytic=False)
        rf = T.in_frame(unitary_frame(T.g))
        eng = np.real([rf[0, 0, 0, 0], rf[0, 0, 1, 1], rf[1, 1, 1, 1]])
        worst = max(worst, float(np.max(np.abs(eng - [abc.A, abc.B, abc.C]))), abs(abc.A - 2), abs(abc.B - 1), abs(abc.C - 2))
    out.append(_result("u_invariant_abc_fs", "oracles", worst, tol, "engine frame components vs (A, B, C) = (2, 1, 2)"))
    T = engine.chern_curvature(models.hopf(2), [2.0, 0.0])
    out.append(_result("hopf_r2211", "oracles", abs(T.R[1, 1, 0, 0] - 0.25), tol))
    return out


def _kahler_like(tol, rng):
    out = []
    profile = models.UInvariantProfile.from_expression("1+r")
    fields = [models.flat(3), models.fubini_study(3), models.u_invariant(profile, 3), models.iwasawa()]
    for mf in fields:
        worst_like = worst_ric = 0.0
        for p in _points(rng, mf.dim, 3, 0.5):
            T = engine.chern_curvature(mf, p, analytic=False)
            worst_like = max(worst_like, engine.kahler_like_check(T).max_violation)
            rics = [engine.ricci(T, k) for k in (1, 2, 3, 4)]
            worst_ric = max(worst_ric, max(float(np.max(np.abs(r - rics[0]))) for r in rics))
        out.append(_result(f"kahler_like_{mf.name}", "kahler_like", worst_like, tol))
        out.append(_result(f"ricci_kinds_agree_{mf.name}", "kahler_like", worst_ric, tol))
    T = engine.chern_curvature(models.hopf(2), [2.0, 0.0])
    viol = engine.kahler_like_check(T).max_violation
    out.append(_flag("hopf_not_kahler_like", "kahler_like", viol > 1e-2, f"violation {viol:.6g}"))
    return out


def _averaging(tol, rng):
    out = []
    for n in (2, 3):
        T = engine.chern_curvature(models.fubini_study(n), _points(rng, n, 1, 0.7)[0])
        worst = 0.0
        readings = set()
        for _ in range(5):
            w = (rng.uniform(-2, 2), rng.uniform(-2, 2))
            rep = weighted.average_identity_audit(T, w, tol=1e-8)
            worst = max(worst, rep["residuals"]["twice_chern"])
            readings.add(tuple(rep["closes_under"]))
        out.append(
            _result(f"average_identity_fs{n}", "averaging", worst, tol, f"closing readings: {sorted(readings)}")
        )
    T = engine.chern_curvature(models.hopf(2), [2.0, 0.0])
    exact = weighted.sphere_average_hsc(T)
    mc = weighted.monte_carlo_sphere_average(T, (0.0, 1.0), n_samples=100_000, seed=int(rng.integers(2**31)))
    out.append(
        _result("mc_hsc_average_hopf2", "averaging", max(0.0, abs(mc.mean - exact) - 3 * mc.stderr), tol,
                f"exact {exact:.6g}, MC {mc.mean:.6g} +- {mc.stderr:.2g}")
    )
    return out


def _weitzenbock(tol, rng):
    worst = 0.0
    for _ in range(20):
        n = int(rng.integers(2, 5))
        T = engine.space_form_tensor(rng.uniform(-4, 4), random_hermitian_pd(n, rng))
        t = rng.uniform(-2, 2)
        rho = np.zeros((n, n), dtype=complex)
        rho[0, 0] = t
        rf = T.in_frame(unitary_frame(T.g))
        expected = (np.real(np.trace(rf[0, 0])) - np.real(rf[0, 0, 0, 0])) * t * t
        worst = max(worst, abs(engine.qobc_weitzenbock(T, rho) - expected))
    return [_result("rank_one_reduction", "weitzenbock", worst, tol)]


def _frame_lines(tol, rng):
    n = 3
    mf = models.fubini_study(n)
    worst_i, e1_def, e1_orth = 0.0, 0.0, 0.0
    for r in (0.5, 2.0):
        T = engine.chern_curvature(mf, [math.sqrt(r), 0, 0])
        abc = models.u_invariant_abc(models.fs_profile(), r)
        F = unitary_frame(T.g)
        for _ in range(3):
            a, b = rng.uniform(-2, 2, size=2)
            got_i = weighted.weighted_orth_ricci(T, (a, b), F[:, 1], "kahler")
            worst_i = max(worst_i, abs(got_i - ((a * n / 2 + b) * abc.C + a * abc.B)))
            line = a * (n - 1) * abc.B + b * abc.A
            e1_def = max(e1_def, abs(weighted.weighted_orth_ricci(T, (a, b), F[:, 0], "kahler") - line))
            e1_orth = max(
                e1_orth,
                abs(weighted.weighted_orth_ricci(T, (a, b), F[:, 0], "kahler", convention="orthogonal") - line),
            )
    matching = [c for c, v in (("definition", e1_def), ("orthogonal", e1_orth)) if v <= tol]
    return [
        _result("fs_ei_line", "frame_lines", worst_i, tol),
        _result("fs_e1_line", "frame_lines", e1_orth, tol,
                f"e1 line matches conventions {matching}; definition residual {e1_def:.3g}"),
    ]


def _conditions(tol, rng):
    cases = [
        ("projectivity(1,-1)", audit.projectivity_condition(1, -1).satisfied is True),
        ("projectivity(1,-1.5) boundary", audit.projectivity_condition(1, -1.5).satisfied is False),
        ("projectivity(1,1)", audit.projectivity_condition(1, 1).satisfied is False),
        ("hodge(1,-1,p=2)", audit.hodge_vanishing_condition(1, -1, 2).satisfied is True),
        ("hodge(1,-1,p=1) boundary", audit.hodge_vanishing_condition(1, -1, 1).satisfied is False),
        ("balanced(1,-1,n=2)", audit.balanced_vanishing_condition(1, -1, 2).satisfied is True),
        ("balanced(1,-2,n=3) boundary", audit.balanced_vanishing_condition(1, -2, 3).satisfied is False),
    ]
    out = [_flag(name, "conditions", ok) for name, ok in cases]
    out.append(
        _result("diameter_bound(1,-0.5,2,1)", "conditions",
                abs(audit.diameter_bound(1, -0.5, 2, 1) - math.pi * math.sqrt(2.5)), tol)
    )
    return out


def _iwasawa(tol, rng):
    mf = models.iwasawa()
    worst = max(
        float(np.max(np.abs(engine.chern_curvature(mf, p, analytic=False).R))) for p in _points(rng, 3, 5)
    )
    return [_result("iwasawa_chern_flat", "iwasawa", worst, tol)]


_RUNNERS = {
    "oracles": _oracles,
    "kahler_like": _kahler_like,
    "averaging": _averaging,
    "weitzenbock": _weitzenbock,
    "frame_lines": _frame_lines,
    "conditions": _conditions,
    "iwasawa": _iwasawa,
}


def run_checks(groups=None, tolerances=None, seed: int = 0) -> list:
    groups = list(GROUPS) if not groups else list(groups)
    unknown = [g for g in groups if g not in _RUNNERS]
    if unknown:
        raise ConfigError(f"unknown check groups {unknown}; known: {list(GROUPS)}")
    tol = float((tolerances or {}).get("check", 1e-6))
    results = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for g in groups:
            rng = np.random.default_rng([seed, GROUPS.index(g)])
            results.extend(_RUNNERS[g](tol, rng))
    return results
