"""Weight-condition predicates, the diameter bound and the Einstein-surface HSC criterion."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .config import DEFAULT_TOLERANCES
from .engine import CurvatureTensor, chern_curvature, ricci
from .errors import DimensionMismatch, InvalidP, InvalidRegime, NotEinstein
from .models import iwasawa
from .tensor_core import MetricField, norm_sq
from .weighted import cone_scan, max_over_directions, minimize_directions

IWASAWA_HODGE_NUMBERS = {"h10": 3, "h20": 3, "h30": 1}


@dataclass(frozen=True)
class WeightConditionVerdict:
    """Outcome of a strict weight inequality; ``margin`` is the smallest slack."""

    name: str
    inputs: dict
    satisfied: bool
    margin: float

    def __bool__(self) -> bool:
        return self.satisfied


def _verdict(name: str, inputs: dict, slacks: Sequence[float]) -> WeightConditionVerdict:
    margin = float(min(slacks))
    return WeightConditionVerdict(name, inputs, margin > 0.0, margin)


def projectivity_condition(alpha: float, beta: float) -> WeightConditionVerdict:
    """``alpha > 0 > beta`` and ``3 alpha + 2 beta > 0``."""
    return _verdict(
        "projectivity", {"alpha": alpha, "beta": beta}, (alpha, -beta, 3 * alpha + 2 * beta)
    )


def hodge_vanishing_condition(alpha: float, beta: float, p: int) -> WeightConditionVerdict:
    """``alpha > 0``, ``beta < 0`` and ``(p+1) alpha + 2 beta > 0``.

    The same inequality is used for the Hermitian variant with balanced
    restricted scalar curvatures.
    """
    if int(p) != p or p < 1:
        raise InvalidP(f"p must be a positive integer, got {p!r}")
    return _verdict(
        "hodge_vanishing",
        {"alpha": alpha, "beta": beta, "p": int(p)},
        (alpha, -beta, (p + 1) * alpha + 2 * beta),
    )


def balanced_vanishing_condition(alpha: float, beta: float, n: int) -> WeightConditionVerdict:
    """``alpha > 0 > beta`` and ``alpha (n+1) + 2 beta > 0``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _verdict(
        "balanced_vanishing",
        {"alpha": alpha, "beta": beta, "n": n},
        (alpha, -beta, (n + 1) * alpha + 2 * beta),
    )


def threefold_projectivity_condition(alpha: float, beta: float, tol: float = 0.0) -> WeightConditionVerdict:
    """Weights of the form ``(alpha, -alpha)`` with ``alpha > 0``.

    The margin is ``alpha`` when ``|alpha + beta| <= tol`` and minus that
    mismatch otherwise.
    """
    mismatch = abs(alpha + beta)
    slacks = (alpha,) if mismatch <= tol else (alpha, -mismatch)
    return _verdict("threefold_projectivity", {"alpha": alpha, "beta": beta}, slacks)


def diameter_bound(alpha: float, beta: float, n: int, lam: float) -> float:
    """``pi * sqrt((alpha (2n - 1) + beta) / lam)``."""
    numer = alpha * (2 * n - 1) + beta
    if lam <= 0:
        raise InvalidRegime(f"lower bound lambda must be positive, got {lam}")
    if numer <= 0:
        raise InvalidRegime(f"alpha(2n-1) + beta = {numer} must be positive")
    return math.pi * math.sqrt(numer / lam)


# ------------------------------------------------------------ Cheung-type


@dataclass
class CheungVerdict:
    lam: float
    frame: np.ndarray
    r1111: complex
    r1122: complex
    r1212: complex
    orth_ricci: float
    part1: bool
    part2: bool
    einstein_residual: float

    @property
    def conclusion(self) -> bool:
        return self.part1 and self.part2

    def as_dict(self) -> dict:
        return {
            "lambda": self.lam,
            "r1111": [self.r1111.real, self.r1111.imag],
            "r1122": [self.r1122.real, self.r1122.imag],
            "r1212": [self.r1212.real, self.r1212.imag],
            "orth_ricci_2_-1": self.orth_ricci,
            "part1": self.part1,
            "part2": self.part2,
            "conclusion": self.conclusion,
            "einstein_residual": self.einstein_residual,
        }


def cheung_criterion(
    source,
    z=None,
    lam: Optional[float] = None,
    ke_tol: float = DEFAULT_TOLERANCES.ke,
    seed: int = 0,
) -> CheungVerdict:
    """Negativity test for HSC of a Kahler-Einstein surface at a point.

    ``source`` is a :class:`MetricField` (with point ``z``) or a precomputed
    :class:`CurvatureTensor`.  With ``e_1`` an HSC-minimizing unit direction
    and ``e_2`` its g-orthogonal complement, the verdict reports
    ``Ric^perp_{2,-1}(e_1) = 2 lam - R_{1111} < 0`` and
    ``|R_{1212}|^2 < |2 lam - R_{1111}|^2``.
    """
    T = chern_curvature(source, z) if isinstance(source, MetricField) else source
    if T.dim != 2:
        raise DimensionMismatch(f"the criterion applies to surfaces, got n = {T.dim}")
    ric = ricci(T, 1)
    if lam is None:
        lam = float(np.real(np.trace(T.g_inv @ ric))) / 2.0
    residual = float(np.max(np.abs(ric - lam * T.g)))
    if residual > ke_tol * max(1.0, abs(lam)):
        raise NotEinstein(f"|Ric - lambda g| = {residual:.3g} exceeds ke_tol")

    e1 = minimize_directions(T, (0.0, 1.0), 1, seed=seed).argmin
    e1 = e1 / math.sqrt(norm_sq(T.g, e1))
    # e2 spans the g-orthogonal complement of e1: <e2, e1> = e2^T G conj(e1) = 0
    c = T.g @ np.conj(e1)
    e2 = np.array([-c[1], c[0]])
    e2 = e2 / math.sqrt(norm_sq(T.g, e2))
    frame = np.column_stack([e1, e2])
    rf = T.in_frame(frame)
    r1111, r1122, r1212 = complex(rf[0, 0, 0, 0]), complex(rf[0, 0, 1, 1]), complex(rf[0, 1, 0, 1])
    orth = 2.0 * lam - r1111.real
    return CheungVerdict(
        lam=lam,
        frame=frame,
        r1111=r1111,
        r1122=r1122,
        r1212=r1212,
        orth_ricci=orth,
        part1=orth < 0.0,
        part2=abs(r1212) ** 2 < orth**2,
        einstein_residual=residual,
    )


def max_hsc(T: CurvatureTensor, seed: int = 0) -> float:
    return max_over_directions(T, (0.0, 1.0), 1, seed=seed).min_value


# ----------------------------------------------------------- Iwasawa audit


@dataclass
class BalancedNonPositivityReport:
    kinds: list
    cells: int
    positive_cells: int
    classification_counts: dict
    hodge_numbers: dict = field(default_factory=lambda: dict(IWASAWA_HODGE_NUMBERS))

    @property
    def passed(self) -> bool:
        return self.positive_cells == 0

    def as_dict(self) -> dict:
        return {
            "kinds": list(self.kinds),
            "cells": self.cells,
            "positive_cells": self.positive_cells,
            "classification_counts": dict(self.classification_counts),
            "hodge_numbers": dict(self.hodge_numbers),
            "passed": self.passed,
        }


def iwasawa_nonpositivity_audit(
    alphas: Sequence[float],
    betas: Sequence[float],
    kinds: Sequence[int] = (1, 2, 3, 4),
    points: Optional[Sequence] = None,
    seed: int = 0,
    jobs: int = 1,
    field_: Optional[MetricField] = None,
) -> BalancedNonPositivityReport:
    """Scan the weight region ``alpha > 0 > beta, 3 alpha + 2 beta > 0`` on the Iwasawa metric.

    Expects no positive cell for any Ricci kind.
    """
    mf = field_ if field_ is not None else iwasawa()
    if points is None:
        rng = np.random.default_rng(seed)
        points = [rng.normal(size=3) + 1j * rng.normal(size=3) for _ in range(2)]
    tensors = [chern_curvature(mf, p) for p in points]
    region = lambda a, b: bool(projectivity_condition(a, b))  # noqa: E731
    counts: dict = {}
    cells = positive = 0
    for kind in kinds:
        if len(alphas) == 0 or len(betas) == 0:
            continue
        cmap = cone_scan(tensors, alphas=alphas, betas=betas, kind=kind, seed=seed, jobs=jobs, region=region)
        for i, j, _, _ in cmap.cells():
            label = cmap.classification[i, j]
            counts[label] = counts.get(label, 0) + 1
            cells += 1
            positive += label == "positive"
    return BalancedNonPositivityReport(list(kinds), cells, positive, counts)
