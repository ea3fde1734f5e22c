"""Synthetic low-rank ground truth and recovery error."""

import numpy as np
import numpy.typing as npt

from rmln_completion import constants
from rmln_completion.solver.projection import ObservationMask, project_omega
from rmln_completion.spectral import DenseMatrix, as_dense_matrix, require_same_shape


def make_low_rank_matrix(rows: int, cols: int, rank: int, seed: int) -> DenseMatrix:
    """Gaussian factor product ``U V^T`` rescaled affinely onto [0, 255]."""
    rng = np.random.default_rng(seed)
    product = rng.standard_normal((rows, rank)) @ rng.standard_normal((rank, cols))
    lo, hi = product.min(), product.max()
    return constants.PIXEL_MIN + (constants.PIXEL_MAX - constants.PIXEL_MIN) * (
        (product - lo) / (hi - lo)
    )


def relative_error(
    truth: npt.ArrayLike,
    estimate: npt.ArrayLike,
    mask: ObservationMask,
    on_missing: bool = True,
) -> float:
    """``||P(estimate - truth)||_F / ||P(truth)||_F`` with P = P_Omega^c (default) or P_Omega."""
    truth = as_dense_matrix(truth, "truth")
    estimate = as_dense_matrix(estimate, "estimate")
    require_same_shape(truth, estimate)
    keep_observed = not on_missing
    num = np.linalg.norm(project_omega(estimate - truth, mask, keep_observed))
    den = np.linalg.norm(project_omega(truth, mask, keep_observed))
    return float(num / den) if den > 0 else float(num)
