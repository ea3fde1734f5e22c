"""Observation set Omega and the projections P_Omega / P_Omega^c."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np
import numpy.typing as npt

from rmln_completion.exceptions import DimensionMismatchError, MaskError
from rmln_completion.spectral import DenseMatrix, as_dense_matrix


@dataclass(frozen=True, eq=False)
class ObservationMask:
    """
    Observed-entry set of an M×N matrix, stored as a boolean matrix
    (True = observed). A boolean matrix cannot hold duplicate pairs.
    """

    observed: npt.NDArray[np.bool_]

    def __post_init__(self) -> None:
        obs = np.asarray(self.observed)
        if obs.ndim != 2 or obs.dtype != np.bool_:
            raise MaskError(f"observed must be a 2-D boolean array, got {obs.dtype} {obs.shape}")
        obs = obs.copy()
        obs.setflags(write=False)
        object.__setattr__(self, "observed", obs)

    @classmethod
    def full(cls, rows: int, cols: int) -> ObservationMask:
        return cls(np.ones((rows, cols), dtype=bool))

    @classmethod
    def empty(cls, rows: int, cols: int) -> ObservationMask:
        return cls(np.zeros((rows, cols), dtype=bool))

    @classmethod
    def from_indices(
        cls, rows: int, cols: int, pairs: Iterable[tuple[int, int]]
    ) -> ObservationMask:
        """Build from explicit ``(i, j)`` pairs; rejects out-of-bounds and duplicates."""
        obs = np.zeros((rows, cols), dtype=bool)
        for i, j in pairs:
            if not (0 <= i < rows and 0 <= j < cols):
                raise MaskError(f"index ({i}, {j}) outside {rows}×{cols}")
            if obs[i, j]:
                raise MaskError(f"duplicate index ({i}, {j})")
            obs[i, j] = True
        return cls(obs)

    @property
    def rows(self) -> int:
        return self.observed.shape[0]

    @property
    def cols(self) -> int:
        return self.observed.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.observed.shape

    @property
    def observed_count(self) -> int:
        return int(np.count_nonzero(self.observed))

    @property
    def missing_count(self) -> int:
        return self.observed.size - self.observed_count

    @property
    def missing_ratio(self) -> float:
        return self.missing_count / self.observed.size

    def indices(self) -> list[tuple[int, int]]:
        """Observed pairs in row-major order."""
        return [(int(i), int(j)) for i, j in np.argwhere(self.observed)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ObservationMask):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.observed, other.observed))

    __hash__ = None  # type: ignore[assignment]


def project_omega(
    m: npt.ArrayLike, mask: ObservationMask, keep_observed: bool = True
) -> DenseMatrix:
    """
    P_Omega(m) when ``keep_observed`` (zero outside Omega), else P_Omega^c(m).
    """
    m = as_dense_matrix(m)
    if m.shape != mask.shape:
        raise DimensionMismatchError(f"matrix {m.shape} does not match mask {mask.shape}")
    keep = mask.observed if keep_observed else ~mask.observed
    return np.where(keep, m, 0.0)
