import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wricci import engine, models
from wricci.errors import NotHermitian, SubspaceNotOrthonormal, ZeroVector
from wricci.tensor_core import random_hermitian_pd, random_unitary, unitary_frame

from conftest import random_kahler_like, random_points


def _loop_scalars(R, g_inv):
    """Plain-loop double contractions used as an oracle for the einsum code."""
    n = R.shape[0]
    s = a = 0j
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    s += g_inv[j, i] * g_inv[l, k] * R[i, j, k, l]
                    a += g_inv[l, i] * g_inv[j, k] * R[i, j, k, l]
    return s.real, a.real


def test_flat_curvature_vanishes():
    T = engine.chern_curvature(models.flat(3), np.array([1.0, 2j, 0.5]))
    assert np.max(np.abs(T.R)) == 0.0
    for k in (1, 2, 3, 4):
        assert np.max(np.abs(engine.ricci(T, k))) == 0.0
    assert engine.scalar(T) == 0.0 and engine.altered_scalar(T) == 0.0


def test_hopf_entry_at_two(hopf2_tensor):
    assert hopf2_tensor.R[1, 1, 0, 0] == pytest.approx(0.25, abs=1e-12)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_hopf_engine_matches_closed_form(n, rng):
    mf = models.hopf(n)
    for z in random_points(rng, n, 5):
        for analytic in (True, False):
            T = engine.chern_curvature(mf, z, analytic=analytic)
            np.testing.assert_allclose(T.R, models.hopf_curvature_tensor(z), atol=1e-8)


@pytest.mark.parametrize("n", [2, 3])
def test_hopf_scalars(n, rng):
    for z in random_points(rng, n, 3):
        T = engine.chern_curvature(models.hopf(n), z)
        s, a = _loop_scalars(models.hopf_curvature_tensor(z), T.g_inv)
        assert engine.scalar(T) == pytest.approx(s, abs=1e-12)
        assert engine.altered_scalar(T) == pytest.approx(a, abs=1e-12)
        assert s == pytest.approx(n * (n - 1) / 4)
        assert a == pytest.approx((n - 1) / 4)


def test_hopf_second_ricci_normalization(hopf2_tensor):
    # Ric^(2) = (n-1)/|z|^2 delta at z = (2, 0)
    np.testing.assert_allclose(engine.ricci(hopf2_tensor, 2), 0.25 * np.eye(2), atol=1e-12)
    z = np.array([1.0 + 1j, -0.5j, 2.0])
    T = engine.chern_curvature(models.hopf(3), z)
    r = np.vdot(z, z).real
    v = np.array([0.6, 0.8j, 0.0])  # Euclidean unit vector
    ric2 = engine.ricci(T, 2)
    val = np.real(v @ ric2 @ np.conj(v))
    assert val == pytest.approx(2 / r, rel=1e-12)
    # the same quantity for a g-unit vector is (n-1)/4, independent of z
    vg = v * np.sqrt(r) / 2
    assert np.real(vg @ ric2 @ np.conj(vg)) == pytest.approx(0.5, rel=1e-12)


def test_fubini_study_identities(fs3_tensor, rng):
    T = fs3_tensor
    for k in (1, 2, 3, 4):
        np.testing.assert_allclose(engine.ricci(T, k), 4 * T.g, atol=1e-12)
    assert engine.scalar(T) == pytest.approx(12.0)
    assert engine.altered_scalar(T) == pytest.approx(12.0)
    for X in random_points(rng, 3, 20):
        assert engine.hsc(T, X) == pytest.approx(2.0, abs=1e-12)


def test_trace_relations(hopf2_tensor, rng):
    tensors = [hopf2_tensor, engine.chern_curvature(models.hopf(3), np.array([1.0, 1j, 0.3]))]
    tensors += [random_kahler_like(3, rng) for _ in range(3)]
    for T in tensors:
        tr = lambda m: np.real(np.trace(T.g_inv @ m))  # noqa: E731
        assert tr(engine.ricci(T, 1)) == pytest.approx(engine.scalar(T))
        assert tr(engine.ricci(T, 2)) == pytest.approx(engine.scalar(T))
        assert np.real(np.trace(T.g_inv.T @ engine.ricci(T, 3).T)) == pytest.approx(engine.altered_scalar(T))
        np.testing.assert_allclose(engine.ricci(T, 3), engine.ricci(T, 4).conj().T, atol=1e-12)


def test_ricci_kinds_three_and_four_need_not_be_hermitian(rng):
    R = rng.normal(size=(3,) * 4) + 1j * rng.normal(size=(3,) * 4)
    R = 0.5 * (R + np.conj(np.transpose(R, (1, 0, 3, 2))))
    T = engine.CurvatureTensor.from_components(R, random_hermitian_pd(3, rng))
    r3 = engine.ricci(T, 3)
    assert np.max(np.abs(r3 - r3.conj().T)) > 1e-2
    for k in (1, 2):
        r = engine.ricci(T, k)
        assert np.max(np.abs(r - r.conj().T)) == 0.0
    with pytest.raises(ValueError):
        engine.ricci(T, 5)


@settings(max_examples=40, deadline=None)
@given(
    seed=st.integers(0, 2**32 - 1),
    scale_re=st.floats(-5, 5).filter(lambda x: abs(x) > 1e-2),
    scale_im=st.floats(-5, 5),
)
def test_hsc_scale_invariance(seed, scale_re, scale_im):
    rng = np.random.default_rng(seed)
    T = engine.chern_curvature(models.hopf(3), rng.normal(size=3) + 1j * rng.normal(size=3))
    X = rng.normal(size=3) + 1j * rng.normal(size=3)
    c = complex(scale_re, scale_im)
    assert engine.hsc(T, c * X) == pytest.approx(engine.hsc(T, X), rel=1e-9, abs=1e-12)


def test_hsc_zero_vector(fs3_tensor):
    with pytest.raises(ZeroVector):
        engine.hsc(fs3_tensor, np.zeros(3))


def test_k_scalar_fubini_study():
    T = engine.chern_curvature(models.fubini_study(3), np.zeros(3))
    basis = np.eye(3)[:, :2]
    assert engine.k_scalar(T, basis) == pytest.approx(6.0)
    assert engine.altered_k_scalar(T, basis) == pytest.approx(6.0)
    with pytest.raises(SubspaceNotOrthonormal):
        engine.k_scalar(T, 2 * basis)


def test_k_scalar_full_dimension_is_scalar(rng):
    for T in [random_kahler_like(3, rng), engine.chern_curvature(models.hopf(3), np.array([1, 2j, 0.5]))]:
        F = unitary_frame(T.g) @ random_unitary(3, rng)
        assert engine.k_scalar(T, F) == pytest.approx(engine.scalar(T))
        assert engine.altered_k_scalar(T, F) == pytest.approx(engine.altered_scalar(T))


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("c", [-2.0, 1.5])
def test_qobc_space_form(n, c, rng):
    T = engine.space_form_tensor(c, random_hermitian_pd(n, rng))
    F = unitary_frame(T.g)
    v = np.zeros(n)
    v[0] = 1.0
    assert engine.qobc_numerator(T, F, v) == pytest.approx((n - 1) * c)
    assert engine.qobc_numerator(T, F, v + 3.0) == pytest.approx((n - 1) * c)
    # the frame Laplacian is c (n I - J): eigenvalues 0 and n c
    assert engine.qobc_min(T, F) == pytest.approx(min(0.0, n * c), abs=1e-12)
    with pytest.raises(ZeroVector):
        engine.qobc_frame(T, F, np.zeros(n))


def test_qobc_flat_is_zero(rng):
    T = engine.chern_curvature(models.flat(3), np.zeros(3))
    assert engine.qobc_frame(T, np.eye(3), rng.normal(size=3)) == 0.0


def test_weitzenbock_fubini_study_rank_one():
    T = engine.chern_curvature(models.fubini_study(2), np.zeros(2))
    assert engine.qobc_weitzenbock(T, np.diag([1.0, 0.0])) == pytest.approx(1.0)
    with pytest.raises(NotHermitian):
        engine.qobc_weitzenbock(T, np.array([[0, 1], [0, 0]]))


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(2, 4))
def test_weitzenbock_on_diagonal_rho_is_half_qobc(seed, n):
    rng = np.random.default_rng(seed)
    T = random_kahler_like(n, rng)
    v = rng.normal(size=n)
    F = unitary_frame(T.g)
    w = engine.qobc_weitzenbock(T, np.diag(v), F)
    assert w == pytest.approx(0.5 * engine.qobc_numerator(T, F, v), rel=1e-9, abs=1e-9)


def test_kahler_like_check(hopf2_tensor, fs3_tensor, rng):
    assert engine.kahler_like_check(fs3_tensor).passed
    assert engine.kahler_like_check(random_kahler_like(3, rng)).passed
    rep = engine.kahler_like_check(hopf2_tensor)
    assert not rep.passed and rep.max_violation == pytest.approx(0.25)


@pytest.mark.parametrize("name", sorted(models.MODEL_REGISTRY))
def test_pairing_symmetry(name, rng):
    mf = models.build_model(name, n=3)
    for z in random_points(rng, 3, 3, 0.6):
        assert engine.chern_curvature(mf, z, analytic=False).pairing_violation() == 0.0
