"""Scalar surrogate profile export (rank vs nuclear envelope vs MLN vs RMLN)."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from rmln_completion import constants
from rmln_completion.exceptions import SurrogateDomainError
from rmln_completion.logging_config import get_logger
from rmln_completion.surrogate import SurrogateParams, scalar_surrogate_profile

logger = get_logger(__name__)


def profile_grid(bound: float, samples: int) -> np.ndarray:
    """Uniform grid on [-bound, bound]; odd sample counts hit 0 exactly."""
    if samples < 2:
        raise SurrogateDomainError(f"samples must be >= 2, got {samples}")
    xs = np.linspace(-bound, bound, samples)
    if samples % 2:
        xs[samples // 2] = 0.0
    return xs


def emit_profile(params: SurrogateParams, bound: float, samples: int, path: str | Path) -> Path:
    """Write the scalar profile CSV (header ``x,rank,nuclear,mln,rmln``, 10 significant digits)."""
    df = scalar_surrogate_profile(profile_grid(bound, samples), params, bound)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    df.to_csv(path, index=False, float_format=constants.CSV_FLOAT_FORMAT)
    logger.info(f"Saved surrogate profile ({samples} samples, bound={bound:g}) to {path}")
    return path
