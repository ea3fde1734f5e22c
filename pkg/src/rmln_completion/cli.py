"""Command-line interface for completion experiments."""

from __future__ import annotations

import sys
from pathlib import Path
from typing import Any, Callable, Optional

import click
from pydantic import ValidationError

from rmln_completion import constants
from rmln_completion.config import Settings, settings
from rmln_completion.exceptions import RMLNError
from rmln_completion.logging_config import get_logger, setup_logging
from rmln_completion.surrogate import WeightStrategy

logger = get_logger(__name__)

STRATEGY_CHOICE = click.Choice([s.value for s in WeightStrategy])
METHOD_CHOICE = click.Choice(["rmln", "nnm"])

# flag destination -> plan key
SOLVER_FLAG_KEYS = {
    "lam": "lambda",
    "eps": "eps",
    "mu0": "mu0",
    "rho": "rho",
    "gamma": "gamma",
    "c": "c",
    "p": "p",
    "outer_iters": "outer_iters",
    "inner_iters": "inner_iters",
}


class ExperimentGroup(click.Group):
    """Click group mapping usage errors to exit code 1 and honouring returned codes."""

    def main(self, *args: Any, **kwargs: Any) -> None:
        kwargs["standalone_mode"] = False
        try:
            rv = super().main(*args, **kwargs)
        except click.ClickException as e:
            e.show()
            sys.exit(constants.EXIT_INVALID)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(constants.EXIT_INVALID)
        sys.exit(rv if isinstance(rv, int) else constants.EXIT_OK)


def solver_options(f: Callable) -> Callable:
    """Attach one flag per solver hyperparameter (unset flags keep the configured value)."""
    options = [
        click.option("--lambda", "lam", type=float, default=None, help="Regularization weight lambda"),
        click.option("--eps", type=float, default=None, help="Log offset epsilon (>= 1)"),
        click.option("--mu0", type=float, default=None, help="Initial ADMM penalty"),
        click.option("--rho", type=float, default=None, help="Penalty growth factor (> 1)"),
        click.option("--gamma", type=float, default=None, help="Weight scale gamma"),
        click.option("--c", "c", type=float, default=None, help="Weight offset c"),
        click.option("--p", "p", type=float, default=None, help="Power p in (0, 1]"),
        click.option("--outer-iters", type=int, default=None, help="Outer ADMM iterations K"),
        click.option("--inner-iters", type=int, default=None, help="DC steps T per singular value"),
        click.option("--strategy", type=STRATEGY_CHOICE, default=None, help="Weight strategy"),
        click.option("--method", type=METHOD_CHOICE, default=None, help="rmln or the nnm baseline"),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def run_options(f: Callable) -> Callable:
    options = [
        click.option("--workers", type=int, default=None, help="Concurrent channel solves"),
        click.option(
            "--timing/--no-timing",
            default=None,
            help="Record wall time (off: seconds column is 0 and CSVs are reproducible)",
        ),
        click.option("--traces/--no-traces", default=None, help="Write per-channel ADMM traces"),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def _run_settings(
    workers: Optional[int], timing: Optional[bool], traces: Optional[bool]
) -> Settings:
    update = {
        "workers": workers,
        "record_timing": timing,
        "write_traces": traces,
    }
    return settings.model_copy(update={k: v for k, v in update.items() if v is not None})


def _invalid(e: Exception) -> click.UsageError:
    logger.error(f"Invalid configuration: {e}")
    return click.UsageError(str(e))


@click.group(cls=ExperimentGroup)
@click.option("--log-level", default=settings.log_level, help="Logging level")
def main(log_level: str) -> None:
    """RMLN matrix completion experiments."""
    setup_logging(log_level)


@main.command()
@click.argument("image", type=click.Path(path_type=Path))
@click.option("--out", type=click.Path(path_type=Path), default=None, help="Output directory")
@click.option("--mr", type=float, default=None, help="Missing ratio of a random mask")
@click.option("--seed", type=int, default=0, show_default=True, help="Mask seed")
@click.option("--blocks", type=str, default=None, help="Block mask 'top:left:height:width;...'")
@solver_options
@run_options
def complete(
    image: Path,
    out: Optional[Path],
    mr: Optional[float],
    seed: int,
    blocks: Optional[str],
    strategy: Optional[str],
    method: Optional[str],
    workers: Optional[int],
    timing: Optional[bool],
    traces: Optional[bool],
    **solver_flags: Optional[float],
) -> int:
    """
    Complete a single image under a random or block mask.
    Writes the observed and reconstructed images plus runs.csv.
    """
    from rmln_completion.evaluation.masks import MaskSpec
    from rmln_completion.harness.runner import complete_image
    from rmln_completion.ingestion.plan_file import parse_blocks
    from rmln_completion.solver.admm import Method, SolverConfig

    s = _run_settings(workers, timing, traces)
    try:
        rects = parse_blocks(blocks) if blocks else []
        mask = MaskSpec(
            kind="block" if rects else "random",
            missing_ratio=0.5 if mr is None else mr,
            blocks=rects,
            seed=seed,
        )
        cfg = SolverConfig.from_settings(s, strategy=strategy, **solver_flags)
        chosen = Method(method or s.method)
    except (ValidationError, RMLNError, ValueError) as e:
        raise _invalid(e)

    out_dir = out or Path(s.output_dir) / image.stem
    logger.info(f"Completing {image} with {chosen.value} ({mask.label()}, seed {seed})")
    try:
        result = complete_image(image, mask, cfg, chosen, out_dir, s)
    except RMLNError as e:
        raise _invalid(e)
    report = result.reports[0]
    click.echo(f"{report.image}: PSNR {report.psnr_db:.2f} dB, SSIM {report.ssim:.4f}")
    return constants.EXIT_OK


@main.command()
@click.option("--plan", "plan_path", type=click.Path(path_type=Path), required=True, help="Plan file")
@click.option("--out", type=click.Path(path_type=Path), default=None, help="Output directory")
@click.option("--mr", type=float, default=None, help="Missing ratio of random masks")
@click.option("--seed", type=str, default=None, help="Seed list, comma-separated")
@click.option("--blocks", type=str, default=None, help="Block mask 'top:left:height:width;...'")
@solver_options
@run_options
def bench(
    plan_path: Path,
    out: Optional[Path],
    mr: Optional[float],
    seed: Optional[str],
    blocks: Optional[str],
    strategy: Optional[str],
    method: Optional[str],
    workers: Optional[int],
    timing: Optional[bool],
    traces: Optional[bool],
    **solver_flags: Optional[float],
) -> int:
    """
    Run an experiment plan (images × strategies × MRs × p values × seeds).
    Exit code 2 when some images were skipped.
    """
    from rmln_completion.harness.plan import plan_from_entries
    from rmln_completion.harness.runner import run_plan
    from rmln_completion.ingestion.plan_file import parse_plan_file

    s = _run_settings(workers, timing, traces)
    overrides = {
        "output_dir": out,
        "mr": mr,
        "seeds": seed,
        "blocks": blocks,
        "strategy": strategy,
        "method": method,
    }
    overrides.update({SOLVER_FLAG_KEYS[k]: v for k, v in solver_flags.items()})
    try:
        entries = parse_plan_file(plan_path)
        entries.update({k: str(v) for k, v in overrides.items() if v is not None})
        plan = plan_from_entries(entries, s)
    except (ValidationError, RMLNError, ValueError) as e:
        raise _invalid(e)

    result = run_plan(plan, s)
    click.echo(f"✓ {len(result.reports)} run(s) written to {plan.output_dir}")
    if result.partial:
        for path, reason in sorted(result.failures.items()):
            click.echo(f"  skipped {path}: {reason}", err=True)
        return constants.EXIT_PARTIAL
    return constants.EXIT_OK


@main.command()
@click.option("--out", type=click.Path(path_type=Path), required=True, help="CSV path")
@click.option("--bound", type=float, default=constants.PIXEL_MAX, show_default=True, help="|x| bound M")
@click.option("--samples", type=int, default=511, show_default=True, help="Grid size (>= 2)")
@click.option("--p", "p", type=float, default=None, help="Power p in (0, 1]")
@click.option("--eps", type=float, default=None, help="Log offset epsilon")
@click.option("--gamma", type=float, default=None, help="Weight scale gamma")
@click.option("--c", "c", type=float, default=None, help="Weight offset c")
def profile(
    out: Path,
    bound: float,
    samples: int,
    p: Optional[float],
    eps: Optional[float],
    gamma: Optional[float],
    c: Optional[float],
) -> int:
    """Write the scalar rank / nuclear / MLN / RMLN comparison as CSV."""
    from rmln_completion.harness.profile import emit_profile
    from rmln_completion.surrogate import SurrogateParams

    try:
        params = SurrogateParams(
            p=settings.p if p is None else p,
            eps=settings.eps if eps is None else eps,
            gamma=settings.gamma if gamma is None else gamma,
            c=settings.c if c is None else c,
        )
        path = emit_profile(params, bound, samples, out)
    except (ValidationError, RMLNError) as e:
        raise _invalid(e)
    click.echo(f"✓ Profile written to {path}")
    return constants.EXIT_OK


@main.command()
@click.option("--out", type=click.Path(path_type=Path), required=True, help="PNG path")
@click.option("--like", type=click.Path(path_type=Path), default=None, help="Take dimensions from an image")
@click.option("--rows", type=int, default=None, help="Mask height")
@click.option("--cols", type=int, default=None, help="Mask width")
@click.option("--mr", type=float, default=None, help="Missing ratio of a random mask")
@click.option("--seed", type=int, default=0, show_default=True, help="Mask seed")
@click.option("--blocks", type=str, default=None, help="Block mask 'top:left:height:width;...'")
def mask(
    out: Path,
    like: Optional[Path],
    rows: Optional[int],
    cols: Optional[int],
    mr: Optional[float],
    seed: int,
    blocks: Optional[str],
) -> int:
    """Write a mask as a binary image (255 observed, 0 missing)."""
    from rmln_completion.evaluation.masks import MaskSpec, build_mask
    from rmln_completion.ingestion.images import load_image, save_mask_image
    from rmln_completion.ingestion.plan_file import parse_blocks

    try:
        if like is not None:
            rows, cols = load_image(like).shape
        if rows is None or cols is None:
            raise click.UsageError("give --like IMAGE or both --rows and --cols")
        rects = parse_blocks(blocks) if blocks else []
        spec = MaskSpec(
            kind="block" if rects else "random",
            missing_ratio=0.5 if mr is None else mr,
            blocks=rects,
            seed=seed,
        )
        m = build_mask(spec, rows, cols)
    except (ValidationError, RMLNError) as e:
        raise _invalid(e)

    save_mask_image(out, m)
    click.echo(f"✓ Mask {rows}×{cols} ({m.missing_count} missing) written to {out}")
    return constants.EXIT_OK


if __name__ == "__main__":
    main()
