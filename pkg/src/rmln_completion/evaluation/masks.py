"""
Observation mask generators: exact-count random masks and rectangular
occlusions. Generation is a pure function of dimensions, spec and seed.
"""

from __future__ import annotations

import math
from enum import Enum
from typing import NamedTuple, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from rmln_completion.exceptions import MaskError
from rmln_completion.logging_config import get_logger
from rmln_completion.solver.projection import ObservationMask

logger = get_logger(__name__)


class Block(NamedTuple):
    """Missing rectangle ``rows[top:top+height], cols[left:left+width]``."""

    top: int
    left: int
    height: int
    width: int


class MaskKind(str, Enum):
    RANDOM = "random"
    BLOCK = "block"


class MaskSpec(BaseModel):
    """How to degrade an image: random MR or a list of rectangles."""

    model_config = ConfigDict(frozen=True)

    kind: MaskKind = MaskKind.RANDOM
    missing_ratio: float = Field(default=0.5, ge=0.0, lt=1.0)
    blocks: tuple[Block, ...] = ()
    seed: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _blocks_well_formed(self) -> MaskSpec:
        for b in self.blocks:
            if min(b) < 0 or b.height == 0 or b.width == 0:
                raise ValueError(f"block {tuple(b)} must have non-negative origin and positive size")
        return self

    def with_seed(self, seed: int) -> MaskSpec:
        return self.model_copy(update={"seed": seed})

    def with_missing_ratio(self, mr: float) -> MaskSpec:
        return MaskSpec(kind=self.kind, missing_ratio=mr, blocks=self.blocks, seed=self.seed)

    def label(self) -> str:
        if self.kind is MaskKind.RANDOM:
            return f"random:{self.missing_ratio:g}"
        return "block:" + ";".join(":".join(str(v) for v in b) for b in self.blocks)


def _round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


def make_random_mask(rows: int, cols: int, mr: float, seed: int) -> ObservationMask:
    """
    Exactly ``round(mr * rows * cols)`` missing entries drawn uniformly without
    replacement from ``numpy.random.default_rng(seed)``.
    """
    if not 0.0 <= mr < 1.0:
        raise MaskError(f"missing ratio must be in [0, 1), got {mr}")
    if rows <= 0 or cols <= 0:
        raise MaskError(f"mask dimensions must be positive, got {rows}×{cols}")
    if seed < 0:
        raise MaskError(f"seed must be unsigned, got {seed}")

    total = rows * cols
    n_missing = _round_half_up(mr * total)
    rng = np.random.default_rng(seed)
    observed = np.ones(total, dtype=bool)
    observed[rng.choice(total, size=n_missing, replace=False)] = False
    logger.debug(f"random mask {rows}×{cols}: {n_missing} missing (seed={seed})")
    return ObservationMask(observed.reshape(rows, cols))


def make_block_mask(rows: int, cols: int, blocks: Sequence[Block | tuple[int, int, int, int]]) -> ObservationMask:
    """Union of rectangles missing, everything else observed. Rectangles may overlap."""
    if rows <= 0 or cols <= 0:
        raise MaskError(f"mask dimensions must be positive, got {rows}×{cols}")
    observed = np.ones((rows, cols), dtype=bool)
    for raw in blocks:
        b = Block(*raw)
        if (
            min(b) < 0
            or b.height == 0
            or b.width == 0
            or b.top + b.height > rows
            or b.left + b.width > cols
        ):
            raise MaskError(f"block {tuple(b)} is outside the {rows}×{cols} frame")
        observed[b.top : b.top + b.height, b.left : b.left + b.width] = False
    return ObservationMask(observed)


def build_mask(spec: MaskSpec, rows: int, cols: int) -> ObservationMask:
    """Dispatch a MaskSpec to the matching generator."""
    if spec.kind is MaskKind.RANDOM:
        return make_random_mask(rows, cols, spec.missing_ratio, spec.seed)
    return make_block_mask(rows, cols, spec.blocks)
