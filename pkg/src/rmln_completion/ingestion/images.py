"""8-bit raster image loading and saving, one DenseMatrix per channel."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np
import numpy.typing as npt
from PIL import Image, UnidentifiedImageError

from rmln_completion import constants
from rmln_completion.exceptions import DimensionMismatchError, ImageFormatError
from rmln_completion.logging_config import get_logger
from rmln_completion.solver.projection import ObservationMask
from rmln_completion.spectral import DenseMatrix

logger = get_logger(__name__)

# PIL modes accepted as 8-bit grayscale / RGB
_CHANNELS_BY_MODE = {"L": 1, "RGB": 3}


@dataclass(frozen=True)
class LoadedImage:
    path: Path
    channels: list[DenseMatrix]
    peak: float = constants.PEAK_8BIT

    @property
    def name(self) -> str:
        return self.path.stem

    @property
    def shape(self) -> tuple[int, int]:
        return self.channels[0].shape

    @property
    def is_color(self) -> bool:
        return len(self.channels) == 3


def load_image(path: str | Path) -> LoadedImage:
    """
    Load an 8-bit grayscale or RGB raster.

    Returns:
        LoadedImage with one (grayscale) or three (RGB) float64 channels in
        [0, 255] and peak 255

    Raises:
        ImageFormatError: file missing, unreadable, or not 8-bit L/RGB
    """
    path = Path(path)
    if not path.exists():
        raise ImageFormatError(f"Image not found at {path}")
    try:
        with Image.open(path) as img:
            img.load()
            mode = img.mode
            if mode not in _CHANNELS_BY_MODE:
                raise ImageFormatError(
                    f"Unsupported image mode '{mode}' in {path}; expected 8-bit L or RGB"
                )
            data = np.asarray(img, dtype=np.uint8)
    except (UnidentifiedImageError, OSError) as e:
        raise ImageFormatError(f"Could not read image {path}: {e}") from e

    if data.ndim == 2:
        channels = [data.astype(np.float64)]
    else:
        channels = [data[:, :, k].astype(np.float64) for k in range(data.shape[2])]
    logger.info(f"Loaded {path} ({mode}, {channels[0].shape[0]}×{channels[0].shape[1]})")
    return LoadedImage(path=path, channels=channels)


def quantize_8bit(values: npt.ArrayLike) -> npt.NDArray[np.uint8]:
    """Clip to [0, 255] and round half away from zero."""
    v = np.clip(np.asarray(values, dtype=np.float64), constants.PIXEL_MIN, constants.PIXEL_MAX)
    return (np.sign(v) * np.floor(np.abs(v) + 0.5)).astype(np.uint8)


def save_image(path: str | Path, channels: Sequence[npt.ArrayLike]) -> Path:
    """Write one (L) or three (RGB) channels as an 8-bit image; format from suffix."""
    if len(channels) not in (1, 3):
        raise DimensionMismatchError(f"expected 1 or 3 channels, got {len(channels)}")
    planes = [quantize_8bit(c) for c in channels]
    if any(p.shape != planes[0].shape or p.ndim != 2 for p in planes):
        raise DimensionMismatchError("channels must be 2-D and equally sized")

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    if len(planes) == 1:
        img = Image.fromarray(planes[0])
    else:
        img = Image.fromarray(np.stack(planes, axis=-1))
    img.save(path)
    logger.info(f"Saved {path}")
    return path


def save_mask_image(path: str | Path, mask: ObservationMask) -> Path:
    """Observed entries 255, missing entries 0."""
    plane = np.where(
        mask.observed, constants.MASK_OBSERVED_VALUE, constants.MASK_MISSING_VALUE
    ).astype(np.float64)
    return save_image(path, [plane])
