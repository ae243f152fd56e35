"""Weighted-LP exactness certificates for nonnegative 0-1 covering programs."""

from .instance import (
    InstanceError,
    MisContext,
    ParseError,
    StandardForm,
    Weights,
    ZeroOneInstance,
    ceil_recover,
    format_instance,
    from_independent_set,
    mis_recover,
    parse_graph,
    parse_instance,
    random_instance,
    to_standard_form,
)
from .lp import (
    LinearProgram,
    LpError,
    LpSolution,
    Status,
    is_unique,
    minimize_linf_residual,
    optimal_face_range,
    solve,
)
from .goodness import (
    DualWitness,
    GoodnessReport,
    beta_bar,
    eta_1K,
    eta_j,
    eta_sK_bound,
    gamma_hat_closed_form,
    gamma_hat_exact,
    partial_sum_norm,
    s_star,
    sufficient_verdict,
)
from .certify import (
    CaseKind,
    Certificate,
    CertifyConfig,
    adjust_weights,
    brute_force_ip,
    certify,
    classify_case,
    solve_weighted_lp,
    verify_certificate,
    weighted_lp,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
