"""
Reconstruction quality: MSE, PSNR (capped at 99 dB) and single-scale SSIM
with an 11×11 Gaussian window (sigma 1.5) and the standard stabilizers
C1 = (0.01 peak)^2, C2 = (0.03 peak)^2. Colour images are scored per channel
and averaged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
import numpy.typing as npt
from skimage.metrics import mean_squared_error, structural_similarity

from rmln_completion import constants
from rmln_completion.exceptions import DimensionMismatchError
from rmln_completion.spectral import DenseMatrix, as_dense_matrix, require_same_shape


@dataclass(frozen=True)
class QualityScore:
    mse: float
    psnr_db: float
    ssim: float


def _pair(reference: npt.ArrayLike, test: npt.ArrayLike) -> tuple[DenseMatrix, DenseMatrix]:
    ref = as_dense_matrix(reference, "reference")
    tst = as_dense_matrix(test, "test")
    require_same_shape(ref, tst, "reference and test")
    return ref, tst


def mse(reference: npt.ArrayLike, test: npt.ArrayLike) -> float:
    ref, tst = _pair(reference, test)
    return float(mean_squared_error(ref, tst))


def psnr_from_mse(value: float, peak: float = constants.PEAK_8BIT) -> float:
    if value <= 0:
        return constants.PSNR_CAP_DB
    return min(10.0 * math.log10(peak**2 / value), constants.PSNR_CAP_DB)


def psnr(reference: npt.ArrayLike, test: npt.ArrayLike, peak: float = constants.PEAK_8BIT) -> float:
    """``10 log10(peak^2 / MSE)``; identical inputs give the 99 dB cap."""
    if peak <= 0:
        raise ValueError(f"peak must be positive, got {peak}")
    return psnr_from_mse(mse(reference, test), peak)


def ssim(reference: npt.ArrayLike, test: npt.ArrayLike, peak: float = constants.PEAK_8BIT) -> float:
    """Mean local SSIM over valid 11×11 Gaussian-weighted windows."""
    if peak <= 0:
        raise ValueError(f"peak must be positive, got {peak}")
    ref, tst = _pair(reference, test)
    if min(ref.shape) < constants.SSIM_WINDOW:
        raise DimensionMismatchError(
            f"SSIM needs images of at least {constants.SSIM_WINDOW}×{constants.SSIM_WINDOW}, "
            f"got {ref.shape}"
        )
    return float(
        structural_similarity(
            ref,
            tst,
            data_range=peak,
            gaussian_weights=True,
            sigma=constants.SSIM_SIGMA,
            use_sample_covariance=False,
            K1=constants.SSIM_K1,
            K2=constants.SSIM_K2,
        )
    )


def score(reference: npt.ArrayLike, test: npt.ArrayLike, peak: float = constants.PEAK_8BIT) -> QualityScore:
    value = mse(reference, test)
    return QualityScore(mse=value, psnr_db=psnr_from_mse(value, peak), ssim=ssim(reference, test, peak))


def score_channels(
    references: Sequence[npt.ArrayLike],
    tests: Sequence[npt.ArrayLike],
    peak: float = constants.PEAK_8BIT,
) -> QualityScore:
    """Mean of the per-channel scores."""
    if len(references) != len(tests) or not references:
        raise DimensionMismatchError(
            f"channel counts differ or are empty: {len(references)} vs {len(tests)}"
        )
    scores = [score(r, t, peak) for r, t in zip(references, tests)]
    return QualityScore(
        mse=float(np.mean([s.mse for s in scores])),
        psnr_db=float(np.mean([s.psnr_db for s in scores])),
        ssim=float(np.mean([s.ssim for s in scores])),
    )
