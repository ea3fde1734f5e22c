"""Shared fixtures: seeded generators and tiny on-disk test images."""

from pathlib import Path

import numpy as np
import pytest
from PIL import Image

from rmln_completion.surrogate import SurrogateParams


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


@pytest.fixture
def reference_params():
    return SurrogateParams(p=0.8, eps=800.0, gamma=10.0, c=1e-8)


def smooth_plane(rows: int, cols: int, phase: float = 0.0) -> np.ndarray:
    """Low-rank-ish smooth 8-bit pattern."""
    r = np.linspace(0.0, np.pi, rows)[:, None]
    c = np.linspace(0.0, 2.0 * np.pi, cols)[None, :]
    plane = 127.5 + 60.0 * np.sin(r + phase) * np.cos(c) + 40.0 * np.cos(2 * r - phase)
    return np.clip(np.round(plane), 0, 255).astype(np.uint8)


@pytest.fixture
def gray_image(tmp_path) -> Path:
    path = tmp_path / "gray.png"
    Image.fromarray(smooth_plane(32, 32)).save(path)
    return path


@pytest.fixture
def rgb_image(tmp_path) -> Path:
    path = tmp_path / "rgb.png"
    planes = [smooth_plane(32, 40, phase) for phase in (0.0, 0.7, 1.4)]
    Image.fromarray(np.stack(planes, axis=-1)).save(path)
    return path
