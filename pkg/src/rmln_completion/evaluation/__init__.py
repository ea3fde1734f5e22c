"""Mask generation and reconstruction quality metrics."""

from .masks import Block, MaskKind, MaskSpec, build_mask, make_block_mask, make_random_mask
from .metrics import QualityScore, mse, psnr, score, score_channels, ssim

__all__ = [
    "Block",
    "MaskKind",
    "MaskSpec",
    "QualityScore",
    "build_mask",
    "make_block_mask",
    "make_random_mask",
    "mse",
    "psnr",
    "score",
    "score_channels",
    "ssim",
]
