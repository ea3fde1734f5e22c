import numpy as np
import pytest
from pydantic import ValidationError

from rmln_completion.evaluation.masks import (
    Block,
    MaskKind,
    MaskSpec,
    build_mask,
    make_block_mask,
    make_random_mask,
)
from rmln_completion.exceptions import MaskError


def test_random_mask_exact_count():
    assert make_random_mask(100, 100, 0.0, seed=1).missing_count == 0

    mask = make_random_mask(100, 100, 0.5, seed=1)
    assert mask.missing_count == 5000
    assert mask.observed_count + mask.missing_count == 100 * 100
    assert mask.missing_ratio == 0.5


@pytest.mark.parametrize("rows,cols,mr,expected", [(3, 5, 0.5, 8), (7, 7, 0.65, 32), (10, 1, 0.75, 8)])
def test_random_mask_rounds_half_up(rows, cols, mr, expected):
    assert make_random_mask(rows, cols, mr, seed=0).missing_count == expected


def test_random_mask_is_deterministic_per_seed():
    a = make_random_mask(64, 48, 0.65, seed=7)
    assert a == make_random_mask(64, 48, 0.65, seed=7)
    assert a != make_random_mask(64, 48, 0.65, seed=8)


@pytest.mark.parametrize("mr", [-0.1, 1.0, 1.5])
def test_random_mask_rejects_bad_ratio(mr):
    with pytest.raises(MaskError):
        make_random_mask(10, 10, mr, seed=0)


def test_block_mask_examples():
    assert make_block_mask(20, 20, []).missing_count == 0
    assert make_block_mask(20, 20, [(0, 0, 20, 20)]).observed_count == 0

    overlap = make_block_mask(30, 30, [Block(0, 0, 10, 10), Block(5, 5, 10, 10)])
    assert overlap.missing_count == 175
    assert not overlap.observed[7, 7]
    assert overlap.observed[0, 12]


@pytest.mark.parametrize("block", [(15, 0, 10, 5), (0, 18, 2, 5), (-1, 0, 2, 2), (0, 0, 0, 3)])
def test_block_mask_rejects_out_of_frame(block):
    with pytest.raises(MaskError):
        make_block_mask(20, 20, [block])


def test_mask_spec_validation():
    with pytest.raises(ValidationError):
        MaskSpec(missing_ratio=1.0)
    with pytest.raises(ValidationError):
        MaskSpec(seed=-1)
    with pytest.raises(ValidationError):
        MaskSpec(kind="block", blocks=[(0, 0, 0, 4)])

    spec = MaskSpec(kind="block", blocks=[(1, 2, 3, 4), (0, 0, 1, 1)])
    assert spec.kind is MaskKind.BLOCK
    assert spec.label() == "block:1:2:3:4;0:0:1:1"
    assert MaskSpec(missing_ratio=0.65).label() == "random:0.65"


def test_build_mask_dispatch():
    random_spec = MaskSpec(missing_ratio=0.25, seed=3)
    assert build_mask(random_spec, 8, 8) == make_random_mask(8, 8, 0.25, 3)
    assert build_mask(random_spec.with_seed(4), 8, 8) == make_random_mask(8, 8, 0.25, 4)

    block_spec = MaskSpec(kind="block", blocks=[(2, 2, 3, 3)])
    assert build_mask(block_spec, 8, 8).missing_count == 9
    with pytest.raises(MaskError):
        build_mask(block_spec, 4, 4)


def test_random_mask_is_uniform_across_positions():
    hits = np.zeros((6, 6))
    for seed in range(400):
        hits += ~make_random_mask(6, 6, 0.5, seed).observed
    # every position is missing about half the time
    assert np.all(np.abs(hits / 400 - 0.5) < 0.15)
