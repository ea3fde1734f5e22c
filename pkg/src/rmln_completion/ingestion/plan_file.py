"""
Experiment plan files: flat ``key = value`` text.

    # weight-strategy ablation
    inputs = data/datasets/set12
    mr_sweep = 0.50, 0.65, 0.75
    strategy_sweep = uniform, log_inverse, reweighted
    seeds = 0, 1, 2
    blocks = 10:10:32:32; 100:40:16:64

Keys are case-insensitive, ``-`` and ``_`` are interchangeable, arrays are
comma-separated and block rectangles are ``top:left:height:width`` groups
separated by ``;``.
"""

from __future__ import annotations

from pathlib import Path

from rmln_completion.exceptions import PlanFileError
from rmln_completion.logging_config import get_logger

logger = get_logger(__name__)

PLAN_KEYS = {
    "inputs",
    "mask",
    "mr",
    "blocks",
    "seeds",
    "method",
    "strategy",
    "sweep",
    "mr_sweep",
    "strategy_sweep",
    "output_dir",
    "lambda",
    "eps",
    "mu0",
    "rho",
    "gamma",
    "c",
    "p",
    "outer_iters",
    "inner_iters",
    "value_min",
    "value_max",
}

KEY_ALIASES = {
    "input": "inputs",
    "seed": "seeds",
    "out": "output_dir",
    "p_sweep": "sweep",
    "lam": "lambda",
}


def normalize_key(key: str) -> str:
    k = key.strip().lower().replace("-", "_")
    k = KEY_ALIASES.get(k, k)
    if k not in PLAN_KEYS:
        raise PlanFileError(f"Unknown plan key '{key}'. Known keys: {sorted(PLAN_KEYS)}")
    return k


def parse_plan_text(text: str, source: str = "<plan>") -> dict[str, str]:
    """Parse plan text into a normalized key -> raw value mapping."""
    entries: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise PlanFileError(f"{source}:{lineno}: expected 'key = value', got '{raw.strip()}'")
        key, value = line.split("=", 1)
        try:
            k = normalize_key(key)
        except PlanFileError as e:
            raise PlanFileError(f"{source}:{lineno}: {e}") from e
        if k in entries:
            raise PlanFileError(f"{source}:{lineno}: key '{k}' given twice")
        entries[k] = value.strip()
    return entries


def parse_plan_file(path: str | Path) -> dict[str, str]:
    path = Path(path)
    if not path.exists():
        raise PlanFileError(f"Plan file not found at {path}")
    entries = parse_plan_text(path.read_text(encoding="utf-8"), source=str(path))
    logger.info(f"Loaded plan {path} ({len(entries)} keys)")
    return entries


def split_list(value: str) -> list[str]:
    return [item.strip() for item in value.split(",") if item.strip()]


def parse_blocks(value: str) -> list[tuple[int, int, int, int]]:
    """``"t:l:h:w; t:l:h:w"`` (``,`` also accepted inside a group)."""
    blocks = []
    for group in value.split(";"):
        group = group.strip()
        if not group:
            continue
        parts = [p.strip() for p in group.replace(",", ":").split(":")]
        if len(parts) != 4:
            raise PlanFileError(f"block '{group}' must be top:left:height:width")
        try:
            top, left, height, width = (int(p) for p in parts)
        except ValueError as e:
            raise PlanFileError(f"block '{group}' has a non-integer field") from e
        blocks.append((top, left, height, width))
    return blocks
