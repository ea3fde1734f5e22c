"""ADMM solver: projections, spectral proximal steps and the completion loops."""

from .admm import (
    CompletionResult,
    Method,
    RunTrace,
    SolverConfig,
    SolverState,
    TraceRecord,
    complete,
    nnm_svt_baseline,
    run_admm,
    update_multiplier,
    update_x,
)
from .projection import ObservationMask, project_omega
from .prox import ProxParams, dc_shrink, dc_singular_update, prox_rmln, scalar_objective, svt_prox
from .synthetic import make_low_rank_matrix, relative_error

__all__ = [
    "CompletionResult",
    "Method",
    "ObservationMask",
    "ProxParams",
    "RunTrace",
    "SolverConfig",
    "SolverState",
    "TraceRecord",
    "complete",
    "dc_shrink",
    "dc_singular_update",
    "make_low_rank_matrix",
    "nnm_svt_baseline",
    "project_omega",
    "prox_rmln",
    "relative_error",
    "run_admm",
    "scalar_objective",
    "svt_prox",
    "update_multiplier",
    "update_x",
]
