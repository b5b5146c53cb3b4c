import warnings

import numpy as np
import pytest

from wricci import engine, models
from wricci.tensor_core import random_hermitian_pd

ACCEPTANCE_LINES: list = []


def record(criterion: str, passed: bool, detail: str = "") -> None:
    """Print and remember one PASS/FAIL line for the acceptance summary."""
    line = f"{'PASS' if passed else 'FAIL'}  {criterion}" + (f"  ({detail})" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_points(rng, n, count, scale=1.0):
    return [scale * (rng.normal(size=n) + 1j * rng.normal(size=n)) for _ in range(count)]


def random_kahler_like(n, rng, terms=3):
    """Random tensor with all Kahler curvature symmetries at a random metric.

    ``R_{ijkl} = sum_m lam_m S_m[i, k] conj(S_m[j, l])`` with complex symmetric
    ``S_m`` is symmetric in (i, k) and (j, l) and satisfies the pairing
    ``conj(R_{jilk}) = R_{ijkl}``; it is generally not Einstein.
    """
    R = np.zeros((n, n, n, n), dtype=complex)
    for _ in range(terms):
        S = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        S = S + S.T
        R += rng.uniform(-1, 1) * np.einsum("ik,jl->ijkl", S, np.conj(S))
    return engine.CurvatureTensor.from_components(R, random_hermitian_pd(n, rng))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(scope="session")
def fs3_tensor():
    return engine.chern_curvature(models.fubini_study(3), np.array([0.3 + 0.1j, -0.2j, 0.5]))


@pytest.fixture(scope="session")
def hopf2_tensor():
    return engine.chern_curvature(models.hopf(2), np.array([2.0, 0.0]))


@pytest.fixture(autouse=True)
def _quiet_kahler_warnings():
    with warnings.catch_warnings():
        warnings.filterwarnings("ignore", message=".*Kahler-like.*")
        yield
