import math

import numpy as np
import pytest

from wricci import audit, engine, models
from wricci.errors import DimensionMismatch, InvalidP, InvalidRegime, NotEinstein
from wricci.tensor_core import random_hermitian_pd


@pytest.mark.parametrize(
    "alpha, beta, satisfied, margin",
    [
        (1.0, -1.0, True, 1.0),
        (1.0, -1.5, False, 0.0),
        (1.0, 0.0, False, 0.0),
        (0.0, -1.0, False, -2.0),
        (2.0, -0.5, True, 0.5),
        (1.0, 1.0, False, -1.0),
    ],
)
def test_projectivity_condition(alpha, beta, satisfied, margin):
    v = audit.projectivity_condition(alpha, beta)
    assert v.satisfied is satisfied and bool(v) is satisfied
    assert v.margin == pytest.approx(margin)


@pytest.mark.parametrize(
    "alpha, beta, p, satisfied",
    [(1, -1, 2, True), (1, -1, 1, False), (1, -0.9, 1, True), (1, 0, 3, False), (-1, -1, 5, False)],
)
def test_hodge_vanishing_condition(alpha, beta, p, satisfied):
    assert audit.hodge_vanishing_condition(alpha, beta, p).satisfied is satisfied


@pytest.mark.parametrize("p", [0, -1, 1.5])
def test_hodge_vanishing_invalid_p(p):
    with pytest.raises(InvalidP):
        audit.hodge_vanishing_condition(1, -1, p)


@pytest.mark.parametrize(
    "alpha, beta, n, satisfied",
    [(1, -1, 2, True), (1, -2, 3, False), (1, -1.99, 3, True), (1, -1.5, 2, False)],
)
def test_balanced_vanishing_condition(alpha, beta, n, satisfied):
    assert audit.balanced_vanishing_condition(alpha, beta, n).satisfied is satisfied


def test_threefold_projectivity_condition():
    assert audit.threefold_projectivity_condition(1.0, -1.0).satisfied
    assert not audit.threefold_projectivity_condition(1.0, -0.9).satisfied
    assert not audit.threefold_projectivity_condition(0.0, 0.0).satisfied
    assert audit.threefold_projectivity_condition(1.0, -0.9, tol=0.2).satisfied


def test_diameter_bound_values():
    assert audit.diameter_bound(1, -0.5, 2, 1) == pytest.approx(4.96729, abs=1e-5)
    assert audit.diameter_bound(1, 0, 1, 1) == pytest.approx(math.pi)
    assert audit.diameter_bound(2, 1, 3, 4) == pytest.approx(math.pi * math.sqrt(11 / 4))


def test_diameter_bound_monotonicity():
    lams = [0.5, 1.0, 2.0, 4.0]
    vals = [audit.diameter_bound(1, -0.5, 3, lam) for lam in lams]
    assert all(a > b for a, b in zip(vals, vals[1:]))
    alphas = [0.5, 1.0, 2.0]
    vals = [audit.diameter_bound(a, -0.5, 3, 1.0) for a in alphas]
    assert all(a < b for a, b in zip(vals, vals[1:]))


@pytest.mark.parametrize("args", [(1, -0.5, 2, 0), (1, -0.5, 2, -1), (1, -3, 2, 1), (0, 0, 2, 1)])
def test_diameter_bound_invalid(args):
    with pytest.raises(InvalidRegime):
        audit.diameter_bound(*args)


def test_diameter_bound_dominates_fubini_study_diameter():
    # CP^n with HSC 2 has diameter pi/sqrt(2); the weighted lower bound at (1, 0) is n + 1
    for n in (2, 3):
        assert audit.diameter_bound(1, 0, n, n + 1) >= math.pi / math.sqrt(2)


def test_cheung_fubini_study_surface():
    v = audit.cheung_criterion(models.fubini_study(2), np.array([0.3, 0.1j]))
    assert v.lam == pytest.approx(3.0)
    assert v.orth_ricci == pytest.approx(4.0)
    assert not v.part1 and not v.conclusion
    assert v.as_dict()["conclusion"] is False


def test_cheung_negative_space_form():
    g = random_hermitian_pd(2, np.random.default_rng(2))
    T = engine.space_form_tensor(-2.0, g)
    v = audit.cheung_criterion(T)
    assert v.lam == pytest.approx(-3.0)
    assert v.r1111.real == pytest.approx(-2.0)
    assert v.orth_ricci == pytest.approx(-4.0)
    assert abs(v.r1212) < 1e-12
    assert v.part1 and v.part2 and v.conclusion
    F = v.frame
    np.testing.assert_allclose(F.T @ T.g @ np.conj(F), np.eye(2), atol=1e-10)


def test_cheung_flat_and_errors():
    assert not audit.cheung_criterion(models.flat(2), np.zeros(2)).conclusion
    with pytest.raises(NotEinstein):
        audit.cheung_criterion(models.hopf(2), np.array([1.0, 0.5j]))
    with pytest.raises(DimensionMismatch):
        audit.cheung_criterion(models.fubini_study(3), np.zeros(3))


def test_max_hsc():
    T = engine.chern_curvature(models.hopf(2), np.array([2.0, 0.0]))
    assert audit.max_hsc(T) == pytest.approx(0.25, abs=1e-10)


def test_iwasawa_audit_single_cell():
    rep = audit.iwasawa_nonpositivity_audit([1.0], [-0.4])
    assert rep.cells == 4 and rep.positive_cells == 0
    assert rep.classification_counts == {"degenerate": 4}
    assert rep.as_dict()["hodge_numbers"] == {"h10": 3, "h20": 3, "h30": 1}


def test_iwasawa_audit_empty_and_region():
    empty = audit.iwasawa_nonpositivity_audit([], [-1.0])
    assert empty.cells == 0 and empty.passed
    # (1, -2) violates 3 alpha + 2 beta > 0 and is skipped
    outside = audit.iwasawa_nonpositivity_audit([1.0], [-2.0], kinds=(1,))
    assert outside.cells == 0
