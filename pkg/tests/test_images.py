import numpy as np
import pytest
from PIL import Image

from rmln_completion.exceptions import ImageFormatError
from rmln_completion.ingestion.images import load_image, quantize_8bit, save_image, save_mask_image
from rmln_completion.solver import ObservationMask


def test_load_grayscale(gray_image):
    img = load_image(gray_image)
    assert len(img.channels) == 1
    assert img.shape == (32, 32)
    assert img.peak == 255.0
    assert not img.is_color
    assert img.name == "gray"
    assert img.channels[0].dtype == np.float64
    assert 0 <= img.channels[0].min() and img.channels[0].max() <= 255


def test_load_rgb(rgb_image):
    img = load_image(rgb_image)
    assert img.is_color
    assert [c.shape for c in img.channels] == [(32, 40)] * 3


def test_save_then_load_is_bit_exact(tmp_path, rng):
    data = rng.integers(0, 256, (20, 30, 3), dtype=np.uint8)
    path = save_image(tmp_path / "x.png", [data[:, :, k] for k in range(3)])
    loaded = load_image(path)
    assert np.array_equal(np.stack(loaded.channels, axis=-1).astype(np.uint8), data)

    gray = rng.integers(0, 256, (9, 13), dtype=np.uint8)
    loaded = load_image(save_image(tmp_path / "g.png", [gray]))
    assert np.array_equal(loaded.channels[0], gray.astype(np.float64))


def test_quantize_rounds_half_away_from_zero():
    out = quantize_8bit([[0.5, 1.49, 2.5, 253.5, -3.0, 300.0]])
    assert out.tolist() == [[1, 1, 3, 254, 0, 255]]


def test_unsupported_and_unreadable_images(tmp_path):
    rgba = tmp_path / "alpha.png"
    Image.fromarray(np.zeros((4, 4, 4), dtype=np.uint8)).save(rgba)
    with pytest.raises(ImageFormatError, match="alpha.png"):
        load_image(rgba)

    junk = tmp_path / "junk.png"
    junk.write_text("not an image")
    with pytest.raises(ImageFormatError, match="junk.png"):
        load_image(junk)

    with pytest.raises(ImageFormatError, match="missing.png"):
        load_image(tmp_path / "missing.png")


def test_save_mask_image(tmp_path):
    mask = ObservationMask(np.array([[True, False], [False, True]]))
    path = save_mask_image(tmp_path / "m.png", mask)
    values = np.asarray(Image.open(path))
    assert values.tolist() == [[255, 0], [0, 255]]
