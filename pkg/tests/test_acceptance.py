"""
Desk-scale inpainting experiments on the scikit-image camera sample resized to
256×256. Each takes minutes; run with ``pytest -m slow``.
"""

import numpy as np
import pandas as pd
import pytest
from PIL import Image
from skimage import data
from skimage.transform import resize

from rmln_completion.config import Settings
from rmln_completion.evaluation.masks import MaskSpec
from rmln_completion.harness.plan import ExperimentPlan
from rmln_completion.harness.reports import summarize
from rmln_completion.harness.runner import run_plan
from rmln_completion.solver import SolverConfig
from rmln_completion.surrogate import WeightStrategy

pytestmark = pytest.mark.slow

SAMPLES = {"camera": data.camera}


@pytest.fixture(scope="module")
def sample_images(tmp_path_factory):
    root = tmp_path_factory.mktemp("samples")
    paths = []
    for name, loader in SAMPLES.items():
        small = resize(loader().astype(np.float64), (256, 256), anti_aliasing=True, preserve_range=True)
        path = root / f"{name}.png"
        Image.fromarray(np.clip(np.round(small), 0, 255).astype(np.uint8)).save(path)
        paths.append(path)
    return paths


def test_reweighted_strategy_wins(sample_images, tmp_path):
    # Measured on camera at the default lambda: 27.27 / 27.17 / 27.12 dB
    plan = ExperimentPlan(
        inputs=sample_images,
        mask=MaskSpec(missing_ratio=0.5),
        solver=SolverConfig(),
        strategy_sweep=list(WeightStrategy),
        seeds=[0, 1, 2],
        output_dir=tmp_path,
    )
    result = run_plan(plan, Settings(record_timing=False, workers=1))
    summary = summarize(result.reports).set_index("strategy")["psnr_db"]

    uniform, log_inverse, reweighted = (
        summary["uniform"],
        summary["log_inverse"],
        summary["reweighted"],
    )
    assert reweighted >= log_inverse >= uniform, summary.to_dict()
    assert reweighted - uniform >= 0.1, summary.to_dict()


def test_power_sensitivity(sample_images, tmp_path):
    sweep = [0.5, 0.6, 0.7, 0.8, 0.9, 1.0]
    plan = ExperimentPlan(
        inputs=sample_images,
        mask=MaskSpec(missing_ratio=0.5),
        solver=SolverConfig(),
        sweep=sweep,
        seeds=[0],
        output_dir=tmp_path,
    )
    result = run_plan(plan, Settings(record_timing=False))
    by_p = summarize(result.reports).set_index("p")["psnr_db"]
    assert sorted(by_p.index) == sweep
    assert np.isfinite(by_p).all()

    # At a fixed lambda the shrinkage roughly doubles per 0.1 step in p, so p = 1.0
    # sits on the over-regularized side of the default
    assert by_p[1.0] < by_p[0.8], by_p.to_dict()

    best = pd.read_csv(tmp_path / "best_p.csv")
    assert len(best) == 1
    assert best.loc[0, "psnr_spread_db"] == pytest.approx(by_p.max() - by_p.min(), abs=1e-6)
    assert best.loc[0, "reference_p_gap_db"] == pytest.approx(by_p.max() - by_p[0.8], abs=1e-6)
