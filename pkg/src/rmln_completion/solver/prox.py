"""
Spectral proximal operators.

``prox_rmln`` solves  argmin_X 1/2 ||X - Y||_F^2 + eta * RMLN_w(X)  by keeping
the singular vectors of Y and shrinking each singular value independently
with a few difference-of-convex (DC) steps: the concave log term is
linearized at the current iterate and the resulting quadratic has the closed
form

    sigma <- max(sigma_y - eta * w * p * sigma_prev^(p-1) / (sigma_prev^p + eps), 0)

``svt_prox`` is the convex counterpart (soft-thresholding) for the nuclear norm.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from rmln_completion import constants
from rmln_completion.exceptions import DimensionMismatchError, SolverConfigError
from rmln_completion.logging_config import get_logger
from rmln_completion.spectral import DenseMatrix, Vector, reconstruct, svd
from rmln_completion.surrogate import SurrogateParams, WeightVector

logger = get_logger(__name__)


@dataclass(frozen=True)
class ProxParams:
    """Penalty scale ``eta`` (lambda / mu in the ADMM loop), weights and DC step count."""

    eta: float
    weights: WeightVector
    surrogate: SurrogateParams
    inner_iters: int = constants.DEFAULT_INNER_ITERS

    def __post_init__(self) -> None:
        # eta = 0 is admitted: it is the lambda = 0 (pure data fit) limit
        if not np.isfinite(self.eta) or self.eta < 0:
            raise SolverConfigError(f"eta must be finite and non-negative, got {self.eta}")
        if self.inner_iters < 1:
            raise SolverConfigError(f"inner_iters must be >= 1, got {self.inner_iters}")
        w = np.asarray(self.weights, dtype=np.float64)
        if w.ndim != 1 or np.any(w <= 0):
            raise SolverConfigError("weights must be a vector of positive values")
        object.__setattr__(self, "weights", w)


def dc_shrink(
    sigma_y: npt.ArrayLike,
    sigma_prev: npt.ArrayLike,
    weights: npt.ArrayLike,
    eta: float,
    params: SurrogateParams,
) -> Vector:
    """
    One DC step for a vector of independent scalar problems.

    For ``p < 1`` a zero iterate is absorbing: the linearized slope diverges as
    ``sigma_prev -> 0+`` so the step returns 0 there.
    """
    sy = np.asarray(sigma_y, dtype=np.float64)
    sp = np.asarray(sigma_prev, dtype=np.float64)
    w = np.asarray(weights, dtype=np.float64)
    if eta == 0:
        return np.maximum(sy, 0.0)

    p = params.p
    absorbing = sp <= 0 if p < 1 else np.zeros(sp.shape, dtype=bool)
    safe = np.where(absorbing, 1.0, sp)
    slope = p * np.power(safe, p - 1.0) / (np.power(safe, p) + params.eps)
    updated = np.maximum(sy - eta * w * slope, 0.0)
    return np.where(absorbing, 0.0, updated)


def dc_singular_update(
    sigma_y: float, sigma_prev: float, w: float, prox: ProxParams
) -> float:
    """Single-value DC update; see ``dc_shrink``."""
    if sigma_y < 0 or sigma_prev < 0:
        raise SolverConfigError("singular values must be non-negative")
    out = dc_shrink(
        np.array([sigma_y]), np.array([sigma_prev]), np.array([w]), prox.eta, prox.surrogate
    )
    return float(out[0])


def scalar_objective(
    sigma: npt.ArrayLike, sigma_y: npt.ArrayLike, w: npt.ArrayLike, eta: float, params: SurrogateParams
) -> Vector:
    """Per-value objective ``1/2 (sigma - sigma_y)^2 + eta * w * log(sigma^p + eps)``."""
    s = np.asarray(sigma, dtype=np.float64)
    return 0.5 * (s - np.asarray(sigma_y)) ** 2 + eta * np.asarray(w) * np.log(
        np.power(s, params.p) + params.eps
    )


def prox_rmln(
    y: npt.ArrayLike,
    prox: ProxParams,
    sigma_init: npt.ArrayLike,
    debug_checks: bool = False,
) -> tuple[DenseMatrix, Vector]:
    """
    Proximal operator of ``eta * RMLN_w``.

    Args:
        y: prox center
        prox: eta, weights (length min(M, N)), surrogate constants, DC steps T
        sigma_init: DC starting points, one per singular value. Zero entries
            carry no linearization point and restart from the center's value.
        debug_checks: verify the shrunken values stay non-increasing

    Returns:
        (U_y diag(sigma*) V_y^T, sigma*)
    """
    factors = svd(y)
    sigma_y = factors.singular_values
    seed = np.asarray(sigma_init, dtype=np.float64)
    if seed.shape != sigma_y.shape:
        raise DimensionMismatchError(
            f"sigma_init has length {seed.size}, expected {sigma_y.size}"
        )
    if prox.weights.shape != sigma_y.shape:
        raise DimensionMismatchError(
            f"weights have length {prox.weights.size}, expected {sigma_y.size}"
        )

    sigma = np.where(seed > 0, seed, sigma_y)
    for _ in range(prox.inner_iters):
        sigma = dc_shrink(sigma_y, sigma, prox.weights, prox.eta, prox.surrogate)

    if debug_checks or logger.isEnabledFor(logging.DEBUG):
        _check_ordering(sigma)
    return reconstruct(factors.with_singular_values(sigma)), sigma


def _check_ordering(sigma: Vector) -> None:
    if np.any(np.diff(sigma) > constants.SVD_TOLERANCE * max(1.0, float(sigma[0]))):
        logger.warning(
            "shrunken singular values are not non-increasing; "
            "per-value problems were solved out of order"
        )


def svt_prox(y: npt.ArrayLike, threshold: float) -> tuple[DenseMatrix, Vector]:
    """Singular value soft-thresholding ``max(sigma - threshold, 0)``."""
    if threshold < 0:
        raise SolverConfigError(f"threshold must be non-negative, got {threshold}")
    factors = svd(y)
    sigma = np.maximum(factors.singular_values - threshold, 0.0)
    return reconstruct(factors.with_singular_values(sigma)), sigma
