import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wricci import models
from wricci.errors import ChartDomainViolation, NotHermitian, NotPositiveDefinite, StencilFailure
from wricci.tensor_core import (
    MetricField,
    finite_difference_jet,
    invert_hermitian,
    metric_jet,
    norm_sq,
    random_hermitian_pd,
    unitary_frame,
)


def test_inverse_of_hopf_metric_at_two():
    g = models.hopf(2)(np.array([2.0, 0.0]))
    np.testing.assert_allclose(g, np.eye(2))
    np.testing.assert_allclose(invert_hermitian(g), np.eye(2))


def test_inverse_rejects_bad_input():
    with pytest.raises(NotPositiveDefinite):
        invert_hermitian(np.diag([1.0, -1.0]))
    with pytest.raises(NotHermitian):
        invert_hermitian(np.array([[1.0, 1.0], [0.0, 1.0]]))


@settings(max_examples=50, deadline=None)
@given(n=st.integers(1, 5), seed=st.integers(0, 2**32 - 1))
def test_inverse_and_double_inverse(n, seed):
    g = random_hermitian_pd(n, np.random.default_rng(seed))
    gi = invert_hermitian(g)
    np.testing.assert_allclose(g @ gi, np.eye(n), atol=1e-10)
    np.testing.assert_allclose(invert_hermitian(gi), g, atol=1e-10)


@settings(max_examples=50, deadline=None)
@given(n=st.integers(1, 5), seed=st.integers(0, 2**32 - 1))
def test_unitary_frame_is_orthonormal_and_triangular(n, seed):
    g = random_hermitian_pd(n, np.random.default_rng(seed))
    F = unitary_frame(g)
    np.testing.assert_allclose(F.T @ g @ np.conj(F), np.eye(n), atol=1e-10)
    np.testing.assert_allclose(np.tril(F, -1), 0.0, atol=1e-14)
    e1 = np.zeros(n)
    e1[0] = 1.0
    np.testing.assert_allclose(F[:, 0], e1 / np.sqrt(norm_sq(g, e1)), atol=1e-12)


def test_unitary_frame_diagonal_metric():
    # Fubini-Study at (1, 0, 0): g = diag(1/4, 1/2, 1/2)
    g = models.fubini_study(3)(np.array([1.0, 0.0, 0.0]))
    np.testing.assert_allclose(unitary_frame(g), np.diag([2.0, np.sqrt(2), np.sqrt(2)]), atol=1e-14)


def test_unitary_frame_is_deterministic():
    g = random_hermitian_pd(3, np.random.default_rng(0))
    assert np.array_equal(unitary_frame(g), unitary_frame(g.copy()))


def test_flat_jet_vanishes():
    jet = metric_jet(models.flat(3), np.array([1.0, 2j, -0.5]), analytic=False)
    np.testing.assert_allclose(jet.g, np.eye(3))
    assert np.max(np.abs(jet.dg)) < 1e-12
    assert np.max(np.abs(jet.ddg)) < 1e-9


def test_hopf_first_derivative_at_two():
    # dg_{k lbar}/dz_1 = -4 zbar_1 delta_kl / |z|^4 = -delta/2 at z = (2, 0)
    jet = metric_jet(models.hopf(2), np.array([2.0, 0.0]), analytic=False)
    np.testing.assert_allclose(jet.dg[0], -0.5 * np.eye(2), atol=1e-10)
    np.testing.assert_allclose(jet.dg[1], 0.0, atol=1e-10)


@pytest.mark.parametrize("name", ["hopf", "fubini_study", "iwasawa"])
def test_finite_difference_matches_analytic_jet(name, rng):
    mf = models.build_model(name, n=3) if name != "iwasawa" else models.iwasawa()
    for _ in range(5):
        z = 0.7 * (rng.normal(size=3) + 1j * rng.normal(size=3))
        fd = metric_jet(mf, z, analytic=False)
        an = metric_jet(mf, z, analytic=True)
        assert np.max(np.abs(fd.dg - an.dg)) < 1e-8
        assert np.max(np.abs(fd.ddg - an.ddg)) < 1e-6
        assert fd.reality_violation() < 1e-12


def test_stencil_error_is_fourth_order():
    mf = models.fubini_study(2)
    z = np.array([0.6 + 0.2j, -0.3j])
    exact = metric_jet(mf, z, analytic=True).ddg
    errs = [np.max(np.abs(finite_difference_jet(mf, z, h).ddg - exact)) for h in (0.08, 0.04, 0.02)]
    slopes = np.log2(np.array(errs[:-1]) / np.array(errs[1:]))
    assert np.all(slopes > 3.5) and np.all(slopes < 4.5), slopes


def test_chart_domain_violation():
    with pytest.raises(ChartDomainViolation):
        models.hopf(2)(np.zeros(2))
    with pytest.raises(ChartDomainViolation):
        metric_jet(models.hopf(2), np.zeros(2))


def test_stencil_leaving_domain():
    # the stencil point z - 2h e_1 hits the origin
    with pytest.raises(StencilFailure):
        finite_difference_jet(models.hopf(2), np.array([2e-3, 0.0]), h=1e-3)


def test_metric_without_analytic_jet_falls_back():
    base = models.fubini_study(2)
    bare = MetricField(name="bare", dim=2, metric=base.metric)
    z = np.array([0.3, 0.1j])
    a = metric_jet(bare, z, analytic=True)
    b = metric_jet(base, z, analytic=True)
    assert np.max(np.abs(a.ddg - b.ddg)) < 1e-6


def test_finite_difference_is_deterministic():
    mf = models.hopf(3)
    z = np.array([1.0, 0.5j, -0.2])
    a, b = finite_difference_jet(mf, z), finite_difference_jet(mf, z)
    assert np.array_equal(a.ddg, b.ddg) and np.array_equal(a.dg, b.dg)
