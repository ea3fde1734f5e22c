"""
Dense-matrix container and thin singular value decomposition services.

Matrices are plain float64 ``numpy`` arrays; ``as_dense_matrix`` is the single
gate that enforces the two-dimensional, finite contract. Factors are returned
as an immutable ``SpectralFactors`` record holding ``U``, ``sigma`` and ``V``
(not ``V^T``).
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np
import numpy.typing as npt
import scipy.linalg

from rmln_completion.exceptions import (
    DecompositionError,
    DimensionMismatchError,
    NonFiniteError,
)
from rmln_completion.logging_config import get_logger

logger = get_logger(__name__)

DenseMatrix = npt.NDArray[np.float64]
Vector = npt.NDArray[np.float64]


def as_dense_matrix(values: npt.ArrayLike, name: str = "matrix") -> DenseMatrix:
    """
    Coerce ``values`` to a finite two-dimensional float64 array.

    Raises:
        DimensionMismatchError: input is not 2-D or has an empty dimension
        NonFiniteError: input holds NaN or Inf
    """
    m = np.asarray(values, dtype=np.float64)
    if m.ndim != 2:
        raise DimensionMismatchError(f"{name} must be two-dimensional, got shape {m.shape}")
    if m.shape[0] == 0 or m.shape[1] == 0:
        raise DimensionMismatchError(f"{name} has an empty dimension: {m.shape}")
    if not np.all(np.isfinite(m)):
        raise NonFiniteError(f"{name} contains NaN or Inf entries")
    return m


def require_same_shape(a: DenseMatrix, b: DenseMatrix, what: str = "operands") -> None:
    """Raise ``DimensionMismatchError`` unless ``a`` and ``b`` share a shape."""
    if a.shape != b.shape:
        raise DimensionMismatchError(f"{what} differ in shape: {a.shape} vs {b.shape}")


@dataclass(frozen=True)
class SpectralFactors:
    """Thin SVD ``U diag(sigma) V^T`` with ``r = min(M, N)``."""

    left: DenseMatrix
    singular_values: Vector
    right: DenseMatrix

    @property
    def shape(self) -> tuple[int, int]:
        return self.left.shape[0], self.right.shape[0]

    @property
    def rank_bound(self) -> int:
        return self.singular_values.shape[0]

    def with_singular_values(self, sigma: npt.ArrayLike) -> SpectralFactors:
        """Same singular vectors, new singular values (order as given)."""
        return replace(self, singular_values=np.asarray(sigma, dtype=np.float64))


def _gesdd_then_gesvd(m: DenseMatrix, compute_uv: bool):
    try:
        return scipy.linalg.svd(
            m, full_matrices=False, compute_uv=compute_uv, lapack_driver="gesdd"
        )
    except np.linalg.LinAlgError as e:
        logger.warning(f"gesdd did not converge on {m.shape} matrix ({e}); retrying with gesvd")
    try:
        return scipy.linalg.svd(
            m, full_matrices=False, compute_uv=compute_uv, lapack_driver="gesvd"
        )
    except np.linalg.LinAlgError as e:
        raise DecompositionError(f"SVD failed to converge on {m.shape} matrix: {e}") from e


def svd(m: npt.ArrayLike) -> SpectralFactors:
    """
    Thin singular value decomposition.

    Args:
        m: finite M×N matrix

    Returns:
        SpectralFactors with non-increasing singular values

    Raises:
        DecompositionError: LAPACK failed with both the divide-and-conquer and
            the QR-iteration drivers
    """
    m = as_dense_matrix(m)
    u, s, vt = _gesdd_then_gesvd(m, compute_uv=True)
    return SpectralFactors(left=u, singular_values=s, right=vt.T)


def singular_values(m: npt.ArrayLike) -> Vector:
    """Singular values only, non-increasing, length ``min(M, N)``."""
    m = as_dense_matrix(m)
    return _gesdd_then_gesvd(m, compute_uv=False)


def reconstruct(f: SpectralFactors) -> DenseMatrix:
    """Return ``U diag(sigma) V^T``."""
    if f.singular_values.ndim != 1 or f.left.ndim != 2 or f.right.ndim != 2:
        raise DimensionMismatchError("factors must be U (M×r), sigma (r,), V (N×r)")
    r = f.singular_values.shape[0]
    if f.left.shape[1] != r or f.right.shape[1] != r:
        raise DimensionMismatchError(
            f"factor widths disagree: U {f.left.shape}, sigma ({r},), V {f.right.shape}"
        )
    return (f.left * f.singular_values) @ f.right.T


def frobenius_distance(a: npt.ArrayLike, b: npt.ArrayLike) -> float:
    """Frobenius norm of ``a - b``."""
    a = as_dense_matrix(a, "a")
    b = as_dense_matrix(b, "b")
    require_same_shape(a, b)
    return float(np.linalg.norm(a - b, ord="fro"))
