"""Chern curvature of Hermitian metric models and weighted orthogonal Ricci curvature."""

__version__ = "0.1.0"

from .config import DEFAULT_TOLERANCES, Tolerances
from .engine import (
    CurvatureTensor,
    altered_k_scalar,
    altered_scalar,
    chern_curvature,
    hsc,
    k_scalar,
    kahler_like_check,
    qobc_frame,
    qobc_weitzenbock,
    ricci,
    scalar,
    space_form_tensor,
)
from .audit import (
    cheung_criterion,
    diameter_bound,
    balanced_vanishing_condition,
    hodge_vanishing_condition,
    iwasawa_nonpositivity_audit,
    projectivity_condition,
)
from .models import (
    UInvariantProfile,
    build_model,
    completeness_report,
    flat,
    fubini_study,
    hopf,
    hopf_curvature_closed_form,
    iwasawa,
    u_invariant,
    u_invariant_abc,
)
from .tensor_core import MetricField, invert_hermitian, metric_jet, unitary_frame
from .weighted import (
    WeightPair,
    average_identity_audit,
    cone_scan,
    dense_direction_oracle,
    min_over_directions,
    minimize_directions,
    weight_necessity_audit,
    weighted_orth_ricci,
)
