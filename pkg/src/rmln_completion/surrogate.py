"""
Rank surrogates evaluated on singular values: nuclear norm, the matrix
logarithmic norm (MLN) and its reweighted form (RMLN), plus the weight
strategies used to reweight the logarithmic terms.

    MLN(X)  = sum_i log(sigma_i^p + eps)
    RMLN(X) = sum_i w_i log(sigma_i^p + eps)
    w_i     = gamma * (log(sigma_i^p + eps) + c)^(p - 1)

Logarithms are natural and ``0^p`` is taken as 0.
"""

from __future__ import annotations

from enum import Enum
from typing import Sequence

import numpy as np
import numpy.typing as npt
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

from rmln_completion import constants
from rmln_completion.exceptions import DimensionMismatchError, SurrogateDomainError
from rmln_completion.logging_config import get_logger
from rmln_completion.shared.profile_columns import (
    PROFILE_COLUMNS,
    PROFILE_MLN,
    PROFILE_NUCLEAR,
    PROFILE_RANK,
    PROFILE_RMLN,
    PROFILE_X,
)
from rmln_completion.spectral import Vector, singular_values

logger = get_logger(__name__)

WeightVector = npt.NDArray[np.float64]


class WeightStrategy(str, Enum):
    """Weight families compared in the reweighting ablation."""

    UNIFORM = "uniform"  # w = 1
    LOG_INVERSE = "log_inverse"  # w = gamma (log(s^p + eps) + c)^-1
    REWEIGHTED = "reweighted"  # w = gamma (log(s^p + eps) + c)^(p-1)


class SurrogateParams(BaseModel):
    """Power ``p``, offset ``eps`` and weight constants ``gamma``, ``c``."""

    model_config = ConfigDict(frozen=True)

    p: float = Field(default=constants.DEFAULT_P, gt=0.0, le=1.0)
    eps: float = Field(default=constants.DEFAULT_EPS, gt=0.0)
    gamma: float = Field(default=constants.DEFAULT_GAMMA, gt=0.0)
    c: float = Field(default=constants.DEFAULT_C, gt=0.0)


def _check_sigmas(sigmas: npt.ArrayLike) -> Vector:
    s = np.asarray(sigmas, dtype=np.float64)
    if s.ndim != 1:
        raise DimensionMismatchError(f"singular values must be a vector, got shape {s.shape}")
    if np.any(s < 0) or not np.all(np.isfinite(s)):
        raise SurrogateDomainError("singular values must be finite and non-negative")
    return s


def log_terms(sigmas: npt.ArrayLike, params: SurrogateParams) -> Vector:
    """Per-value ``log(sigma^p + eps)``."""
    s = _check_sigmas(sigmas)
    return np.log(np.power(s, params.p) + params.eps)


def nuclear_norm(m: npt.ArrayLike) -> float:
    """Sum of singular values."""
    return float(np.sum(singular_values(m)))


def mln_value(m: npt.ArrayLike, params: SurrogateParams) -> float:
    """Matrix logarithmic norm ``sum_i log(sigma_i^p + eps)``."""
    return float(np.sum(log_terms(singular_values(m), params)))


def compute_weights(
    sigmas: npt.ArrayLike,
    params: SurrogateParams,
    strategy: WeightStrategy = WeightStrategy.REWEIGHTED,
) -> WeightVector:
    """
    Weight vector for the given singular values.

    Args:
        sigmas: non-negative singular values
        params: surrogate constants
        strategy: uniform, log_inverse or reweighted

    Returns:
        Strictly positive weights, one per singular value

    Raises:
        SurrogateDomainError: ``log(sigma^p + eps) + c <= 0`` for some value
    """
    strategy = WeightStrategy(strategy)
    s = _check_sigmas(sigmas)
    if strategy is WeightStrategy.UNIFORM:
        return np.ones_like(s)

    base = log_terms(s, params) + params.c
    if np.any(base <= 0):
        raise SurrogateDomainError(
            f"weight base log(sigma^p + eps) + c is non-positive (eps={params.eps}); "
            "use eps >= 1"
        )
    exponent = -1.0 if strategy is WeightStrategy.LOG_INVERSE else params.p - 1.0
    return params.gamma * np.power(base, exponent)


def rmln_value(m: npt.ArrayLike, params: SurrogateParams, w: npt.ArrayLike) -> float:
    """Reweighted MLN ``sum_i w_i log(sigma_i^p + eps)``."""
    sigmas = singular_values(m)
    w = np.asarray(w, dtype=np.float64)
    if w.shape != sigmas.shape:
        raise DimensionMismatchError(
            f"weights have length {w.size}, expected min(M, N) = {sigmas.size}"
        )
    return float(np.sum(w * log_terms(sigmas, params)))


def scalar_surrogate_profile(
    xs: Sequence[float] | npt.ArrayLike,
    params: SurrogateParams,
    bound: float,
) -> pd.DataFrame:
    """
    Scalar comparison of rank, nuclear envelope, MLN and RMLN for ``|x| <= bound``.

    The RMLN column uses the reweighted strategy at ``sigma = |x|``. Values are
    raw; any normalization for display belongs to the plotting step.
    """
    if bound <= 0:
        raise SurrogateDomainError(f"bound must be positive, got {bound}")
    x = np.asarray(xs, dtype=np.float64).ravel()
    a = np.abs(x)
    if np.any(a > bound):
        raise SurrogateDomainError(f"samples exceed the bound |x| <= {bound}")

    mln = log_terms(a, params)
    w = compute_weights(a, params, WeightStrategy.REWEIGHTED)
    return pd.DataFrame(
        {
            PROFILE_X: x,
            PROFILE_RANK: (a > 0).astype(int),
            PROFILE_NUCLEAR: a / bound,
            PROFILE_MLN: mln,
            PROFILE_RMLN: w * mln,
        },
        columns=PROFILE_COLUMNS,
    )
