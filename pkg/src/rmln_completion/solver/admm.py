"""
ADMM for RMLN-regularized matrix completion

    min_X  lambda * RMLN_w(X) + 1/2 ||P_Omega(X - Y)||_F^2

split as X = Z with multiplier Lambda and penalty mu^(k) = mu0 * rho^k.
Each outer iteration k:

    X^(k+1) = P_Omega^c(Z - Lambda/mu) + P_Omega((Y + mu Z - Lambda) / (1 + mu))
    w       = weights(sigma(Z^(k)))
    Z^(k+1) = prox_{(lambda/mu) RMLN_w}(X^(k+1) + Lambda/mu), DC seeded by sigma(Z^(k))
    Lambda += mu (X^(k+1) - Z^(k+1)); mu *= rho

The loop runs a fixed number of iterations; ``RunTrace`` records the primal
residual and data fit of each one. The NNM baseline shares the loop and swaps
the Z-step for singular value soft-thresholding.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from pathlib import Path
from typing import Callable, NamedTuple, Optional

import numpy as np
import numpy.typing as npt
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from rmln_completion import constants
from rmln_completion.config import Settings
from rmln_completion.exceptions import DimensionMismatchError, SolverConfigError
from rmln_completion.logging_config import get_logger
from rmln_completion.shared.trace_columns import (
    TRACE_COLUMNS,
    TRACE_DATA_FIT,
    TRACE_K,
    TRACE_MU,
    TRACE_PRIMAL_RESIDUAL,
)
from rmln_completion.solver.projection import ObservationMask, project_omega
from rmln_completion.solver.prox import ProxParams, prox_rmln, svt_prox
from rmln_completion.spectral import DenseMatrix, Vector, as_dense_matrix, singular_values
from rmln_completion.surrogate import SurrogateParams, WeightStrategy, compute_weights

logger = get_logger(__name__)


class Method(str, Enum):
    RMLN = "rmln"
    NNM = "nnm"


class SolverConfig(BaseModel):
    """Hyperparameters of the ADMM loop."""

    model_config = ConfigDict(frozen=True)

    lam: float = Field(default=constants.DEFAULT_LAMBDA, ge=0.0)
    mu0: float = Field(default=constants.DEFAULT_MU0, gt=0.0)
    rho: float = Field(default=constants.DEFAULT_RHO, gt=1.0)
    outer_iters: int = Field(default=constants.DEFAULT_OUTER_ITERS, ge=1)
    inner_iters: int = Field(default=constants.DEFAULT_INNER_ITERS, ge=1)
    surrogate: SurrogateParams = Field(default_factory=SurrogateParams)
    strategy: WeightStrategy = WeightStrategy.REWEIGHTED
    # None disables the final clip
    value_range: Optional[tuple[float, float]] = (constants.PIXEL_MIN, constants.PIXEL_MAX)
    debug_checks: bool = False

    @field_validator("value_range")
    @classmethod
    def _ordered_range(cls, v: Optional[tuple[float, float]]) -> Optional[tuple[float, float]]:
        if v is not None and not v[0] < v[1]:
            raise ValueError(f"value_range must satisfy min < max, got {v}")
        return v

    @model_validator(mode="after")
    def _eps_at_least_one(self) -> SolverConfig:
        # keeps log(sigma^p + eps) >= 0, so every weight base is positive
        if self.surrogate.eps < 1.0:
            raise ValueError(f"eps must be >= 1 for the weight formulas, got {self.surrogate.eps}")
        return self

    @classmethod
    def from_settings(cls, s: Settings, **overrides) -> SolverConfig:
        """Build from settings; ``overrides`` replace individual keys (None is ignored)."""
        values = {
            "lam": s.lam,
            "eps": s.eps,
            "mu0": s.mu0,
            "rho": s.rho,
            "gamma": s.gamma,
            "c": s.c,
            "p": s.p,
            "outer_iters": s.outer_iters,
            "inner_iters": s.inner_iters,
            "strategy": s.strategy,
            "value_range": (s.value_min, s.value_max),
            "debug_checks": s.debug_checks,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        surrogate = SurrogateParams(
            p=values.pop("p"), eps=values.pop("eps"), gamma=values.pop("gamma"), c=values.pop("c")
        )
        return cls(surrogate=surrogate, **values)

    def with_p(self, p: float) -> SolverConfig:
        return self.model_copy(update={"surrogate": self.surrogate.model_copy(update={"p": p})})

    def with_strategy(self, strategy: WeightStrategy) -> SolverConfig:
        return self.model_copy(update={"strategy": WeightStrategy(strategy)})


@dataclass(frozen=True)
class SolverState:
    """ADMM iterate (X, Z, Lambda, mu^(k), k)."""

    x: DenseMatrix
    z: DenseMatrix
    lagrange: DenseMatrix
    mu: float
    iter: int = 0

    @classmethod
    def initial(cls, y_observed: DenseMatrix, mu0: float) -> SolverState:
        """X = Z = P_Omega(Y), Lambda = 0."""
        return cls(
            x=y_observed.copy(),
            z=y_observed.copy(),
            lagrange=np.zeros_like(y_observed),
            mu=mu0,
            iter=0,
        )


@dataclass(frozen=True)
class TraceRecord:
    k: int
    mu: float
    primal_residual: float
    data_fit: float


@dataclass
class RunTrace:
    """Per-iteration residuals of one solver run."""

    records: list[TraceRecord] = field(default_factory=list)

    def append(self, record: TraceRecord) -> None:
        self.records.append(record)

    def __len__(self) -> int:
        return len(self.records)

    @property
    def final(self) -> TraceRecord:
        return self.records[-1]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                TRACE_K: [r.k for r in self.records],
                TRACE_MU: [r.mu for r in self.records],
                TRACE_PRIMAL_RESIDUAL: [r.primal_residual for r in self.records],
                TRACE_DATA_FIT: [r.data_fit for r in self.records],
            },
            columns=TRACE_COLUMNS,
        )

    def to_csv(self, path: str | Path) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        self.to_frame().to_csv(path, index=False, float_format=constants.CSV_FLOAT_FORMAT)
        return path


class CompletionResult(NamedTuple):
    matrix: DenseMatrix
    trace: RunTrace


def _check_against_mask(m: DenseMatrix, mask: ObservationMask, name: str) -> None:
    if m.shape != mask.shape:
        raise DimensionMismatchError(f"{name} {m.shape} does not match mask {mask.shape}")


def update_x(state: SolverState, y: npt.ArrayLike, mask: ObservationMask) -> DenseMatrix:
    """Closed-form minimizer of the X-subproblem."""
    if state.mu <= 0:
        raise SolverConfigError(f"mu must be positive, got {state.mu}")
    y = as_dense_matrix(y, "y")
    _check_against_mask(y, mask, "y")
    _check_against_mask(state.z, mask, "Z")
    mu = state.mu
    unobserved = state.z - state.lagrange / mu
    observed = (y + mu * state.z - state.lagrange) / (1.0 + mu)
    return np.where(mask.observed, observed, unobserved)


def update_multiplier(state: SolverState, rho: float) -> SolverState:
    """Lambda <- Lambda + mu (X - Z); mu <- mu * rho; k <- k + 1."""
    if rho <= 1:
        raise SolverConfigError(f"rho must exceed 1, got {rho}")
    if state.x.shape != state.z.shape or state.lagrange.shape != state.x.shape:
        raise DimensionMismatchError("X, Z and Lambda must share a shape")
    return replace(
        state,
        lagrange=state.lagrange + state.mu * (state.x - state.z),
        mu=state.mu * rho,
        iter=state.iter + 1,
    )


# (center, mu^(k), sigma(Z^(k))) -> (Z^(k+1), sigma(Z^(k+1)))
ZStep = Callable[[DenseMatrix, float, Vector], tuple[DenseMatrix, Vector]]


def _admm_loop(
    y: npt.ArrayLike, mask: ObservationMask, cfg: SolverConfig, z_step: ZStep, label: str
) -> CompletionResult:
    y = as_dense_matrix(y, "y")
    _check_against_mask(y, mask, "y")
    # values outside Omega never reach the solver
    y_obs = project_omega(y, mask)

    state = SolverState.initial(y_obs, cfg.mu0)
    sigma_z = singular_values(state.z)
    trace = RunTrace()
    logger.debug(
        f"{label}: {y.shape[0]}×{y.shape[1]}, MR={mask.missing_ratio:.3f}, "
        f"K={cfg.outer_iters}, lambda={cfg.lam:g}"
    )

    for k in range(cfg.outer_iters):
        mu = state.mu
        x = update_x(state, y_obs, mask)
        center = x + state.lagrange / mu
        z, sigma_z = z_step(center, mu, sigma_z)
        state = update_multiplier(replace(state, x=x, z=z), cfg.rho)

        record = TraceRecord(
            k=k,
            mu=mu,
            primal_residual=float(np.linalg.norm(x - z)),
            data_fit=float(np.linalg.norm(project_omega(x - y_obs, mask))),
        )
        trace.append(record)
        logger.debug(
            f"{label} k={k} mu={mu:.4g} primal={record.primal_residual:.4g} "
            f"fit={record.data_fit:.4g} rank={int(np.count_nonzero(sigma_z))}"
        )

    out = state.x
    if cfg.value_range is not None:
        out = np.clip(out, *cfg.value_range)
    return CompletionResult(out, trace)


def _validated(cfg: SolverConfig | None) -> SolverConfig:
    if cfg is None:
        return SolverConfig()
    if not isinstance(cfg, SolverConfig):
        raise SolverConfigError(f"expected SolverConfig, got {type(cfg).__name__}")
    return cfg


def run_admm(
    y: npt.ArrayLike, mask: ObservationMask, cfg: SolverConfig | None = None
) -> CompletionResult:
    """
    RMLN matrix completion.

    Args:
        y: observed matrix; entries outside Omega are ignored
        mask: observation set Omega
        cfg: solver configuration (defaults to the reference settings)

    Returns:
        (X^(K) clipped to ``cfg.value_range``, RunTrace)
    """
    cfg = _validated(cfg)

    def rmln_step(center: DenseMatrix, mu: float, sigma_z: Vector) -> tuple[DenseMatrix, Vector]:
        weights = compute_weights(sigma_z, cfg.surrogate, cfg.strategy)
        prox = ProxParams(
            eta=cfg.lam / mu,
            weights=weights,
            surrogate=cfg.surrogate,
            inner_iters=cfg.inner_iters,
        )
        return prox_rmln(center, prox, sigma_z, debug_checks=cfg.debug_checks)

    return _admm_loop(y, mask, cfg, rmln_step, "rmln")


def nnm_svt_baseline(
    y: npt.ArrayLike, mask: ObservationMask, cfg: SolverConfig | None = None
) -> CompletionResult:
    """Nuclear-norm completion on the same ADMM skeleton (Z-step: SVT with lambda/mu)."""
    cfg = _validated(cfg)

    def svt_step(center: DenseMatrix, mu: float, sigma_z: Vector) -> tuple[DenseMatrix, Vector]:
        return svt_prox(center, cfg.lam / mu)

    return _admm_loop(y, mask, cfg, svt_step, "nnm")


def complete(
    y: npt.ArrayLike,
    mask: ObservationMask,
    cfg: SolverConfig | None = None,
    method: Method = Method.RMLN,
) -> CompletionResult:
    """Dispatch to ``run_admm`` or ``nnm_svt_baseline``."""
    if Method(method) is Method.NNM:
        return nnm_svt_baseline(y, mask, cfg)
    return run_admm(y, mask, cfg)
