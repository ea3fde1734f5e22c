"""ExperimentPlan: what to run, built from plan-file keys, settings and flags."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from pathlib import Path
from typing import Any, Mapping, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from rmln_completion.config import Settings
from rmln_completion.evaluation.masks import MaskKind, MaskSpec
from rmln_completion.exceptions import PlanFileError
from rmln_completion.ingestion.datasets import list_images
from rmln_completion.ingestion.plan_file import parse_blocks, split_list
from rmln_completion.solver.admm import Method, SolverConfig
from rmln_completion.surrogate import WeightStrategy


@dataclass(frozen=True)
class RunConfiguration:
    """One cell of the strategy × MR × p grid."""

    index: int
    method: Method
    strategy: WeightStrategy
    p: float
    mask: MaskSpec
    solver: SolverConfig


class ExperimentPlan(BaseModel):
    model_config = ConfigDict(frozen=True)

    inputs: list[Path] = Field(min_length=1)
    mask: MaskSpec = Field(default_factory=MaskSpec)
    solver: SolverConfig = Field(default_factory=SolverConfig)
    method: Method = Method.RMLN
    strategy: WeightStrategy = WeightStrategy.REWEIGHTED
    sweep: Optional[list[float]] = None
    mr_sweep: Optional[list[float]] = None
    strategy_sweep: Optional[list[WeightStrategy]] = None
    output_dir: Path = Path("results")
    seeds: list[int] = Field(default_factory=lambda: [0], min_length=1)

    @model_validator(mode="before")
    @classmethod
    def _seeds_follow_mask(cls, data: Any) -> Any:
        # Without explicit seeds the mask seed is the only run seed
        if isinstance(data, dict) and data.get("seeds") is None:
            mask = data.get("mask")
            seed = mask.get("seed", 0) if isinstance(mask, dict) else getattr(mask, "seed", 0)
            data = {**data, "seeds": [seed]}
        return data

    @field_validator("sweep")
    @classmethod
    def _p_in_range(cls, v: Optional[list[float]]) -> Optional[list[float]]:
        if v is not None:
            if not v:
                raise ValueError("sweep must not be empty")
            bad = [p for p in v if not 0.0 < p <= 1.0]
            if bad:
                raise ValueError(f"sweep values must lie in (0, 1], got {bad}")
        return v

    @field_validator("mr_sweep")
    @classmethod
    def _mr_in_range(cls, v: Optional[list[float]]) -> Optional[list[float]]:
        if v is not None:
            if not v:
                raise ValueError("mr_sweep must not be empty")
            bad = [m for m in v if not 0.0 <= m < 1.0]
            if bad:
                raise ValueError(f"mr_sweep values must lie in [0, 1), got {bad}")
        return v

    @field_validator("seeds")
    @classmethod
    def _unsigned(cls, v: list[int]) -> list[int]:
        if any(s < 0 for s in v):
            raise ValueError(f"seeds must be unsigned, got {v}")
        return v

    def configurations(self) -> list[RunConfiguration]:
        """Grid in a fixed order: strategy, then MR, then p."""
        strategies = self.strategy_sweep or [self.strategy]
        if self.mask.kind is MaskKind.RANDOM:
            mrs = self.mr_sweep or [self.mask.missing_ratio]
        else:
            mrs = [None]
        ps = self.sweep or [self.solver.surrogate.p]

        grid = []
        for index, (strategy, mr, p) in enumerate(product(strategies, mrs, ps)):
            mask = self.mask if mr is None else self.mask.with_missing_ratio(mr)
            grid.append(
                RunConfiguration(
                    index=index,
                    method=self.method,
                    strategy=strategy,
                    p=p,
                    mask=mask,
                    solver=self.solver.with_strategy(strategy).with_p(p),
                )
            )
        return grid

    @property
    def has_p_sweep(self) -> bool:
        return bool(self.sweep) and len(self.sweep) > 1


def _expand_inputs(value: str) -> list[Path]:
    paths: list[Path] = []
    for item in split_list(value):
        path = Path(item)
        paths.extend(list_images(path) if path.is_dir() else [path])
    return paths


def _floats(value: str, key: str) -> list[float]:
    try:
        return [float(v) for v in split_list(value)]
    except ValueError as e:
        raise PlanFileError(f"'{key}' must be a comma-separated list of numbers: {value}") from e


def _ints(value: str, key: str) -> list[int]:
    try:
        return [int(v) for v in split_list(value)]
    except ValueError as e:
        raise PlanFileError(f"'{key}' must be a comma-separated list of integers: {value}") from e


def _number(entries: Mapping[str, str], key: str, default: float) -> float:
    if key not in entries:
        return default
    try:
        return float(entries[key])
    except ValueError as e:
        raise PlanFileError(f"'{key}' must be a number, got '{entries[key]}'") from e


def plan_from_entries(entries: Mapping[str, str], s: Settings) -> ExperimentPlan:
    """
    Build a plan from normalized plan keys; settings fill whatever is absent.

    Raises:
        PlanFileError: malformed values
        pydantic.ValidationError: values outside their domains
    """
    if "inputs" not in entries:
        raise PlanFileError("plan needs 'inputs'")
    inputs = _expand_inputs(entries["inputs"])

    blocks = parse_blocks(entries["blocks"]) if "blocks" in entries else []
    kind = entries.get("mask", "block" if blocks else "random").strip().lower()
    seeds = _ints(entries["seeds"], "seeds") if "seeds" in entries else [0]
    strategy = entries.get("strategy", s.strategy).strip()

    solver = SolverConfig.from_settings(
        s,
        lam=_number(entries, "lambda", s.lam),
        eps=_number(entries, "eps", s.eps),
        mu0=_number(entries, "mu0", s.mu0),
        rho=_number(entries, "rho", s.rho),
        gamma=_number(entries, "gamma", s.gamma),
        c=_number(entries, "c", s.c),
        p=_number(entries, "p", s.p),
        outer_iters=int(_number(entries, "outer_iters", s.outer_iters)),
        inner_iters=int(_number(entries, "inner_iters", s.inner_iters)),
        strategy=strategy,
        value_range=(
            _number(entries, "value_min", s.value_min),
            _number(entries, "value_max", s.value_max),
        ),
    )

    return ExperimentPlan(
        inputs=inputs,
        mask=MaskSpec(
            kind=kind,
            missing_ratio=_number(entries, "mr", 0.5),
            blocks=blocks,
            seed=seeds[0],
        ),
        solver=solver,
        method=entries.get("method", s.method).strip(),
        strategy=strategy,
        sweep=_floats(entries["sweep"], "sweep") if "sweep" in entries else None,
        mr_sweep=_floats(entries["mr_sweep"], "mr_sweep") if "mr_sweep" in entries else None,
        strategy_sweep=split_list(entries["strategy_sweep"])
        if "strategy_sweep" in entries
        else None,
        output_dir=Path(entries.get("output_dir", s.output_dir)),
        seeds=seeds,
    )
