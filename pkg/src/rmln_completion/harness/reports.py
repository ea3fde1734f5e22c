"""RunReport rows and the CSV files built from them."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

import pandas as pd

from rmln_completion import constants
from rmln_completion.logging_config import get_logger
from rmln_completion.shared.report_columns import (
    ALL,
    BEST_P,
    BEST_P_COLUMNS,
    CHANNEL,
    CHANNEL_COLUMNS,
    IMAGE,
    ITERS,
    METHOD,
    MR,
    P,
    PSNR_DB,
    PSNR_SPREAD_DB,
    REFERENCE_P_GAP_DB,
    REPORT_COLUMNS,
    SECONDS,
    SEED,
    SSIM,
    STRATEGY,
)

logger = get_logger(__name__)

# grouping column kept out of the written files
CONFIG_INDEX = "config_index"


@dataclass(frozen=True)
class RunReport:
    """Metrics of one (image, seed, configuration); ``channel`` is None for the channel mean."""

    image: str
    method: str
    strategy: str
    p: float
    mr: float
    seed: int
    psnr_db: float
    ssim: float
    seconds: float
    iters: int
    config_index: int = 0
    channel: Optional[int] = None

    def to_row(self) -> dict:
        return {
            IMAGE: self.image,
            CHANNEL: self.channel,
            METHOD: self.method,
            STRATEGY: self.strategy,
            P: self.p,
            MR: self.mr,
            SEED: self.seed,
            PSNR_DB: self.psnr_db,
            SSIM: self.ssim,
            SECONDS: self.seconds,
            ITERS: self.iters,
            CONFIG_INDEX: self.config_index,
        }


def reports_frame(reports: Sequence[RunReport]) -> pd.DataFrame:
    columns = CHANNEL_COLUMNS + [CONFIG_INDEX]
    return pd.DataFrame([r.to_row() for r in reports], columns=columns)


def summarize(reports: Sequence[RunReport]) -> pd.DataFrame:
    """Per-configuration means over images and seeds; ``image`` and ``seed`` become ``*``."""
    df = reports_frame(reports)
    if df.empty:
        return pd.DataFrame(columns=REPORT_COLUMNS)
    grouped = df.groupby(CONFIG_INDEX, sort=True)
    summary = grouped.agg(
        {
            METHOD: "first",
            STRATEGY: "first",
            P: "first",
            MR: "mean",
            PSNR_DB: "mean",
            SSIM: "mean",
            SECONDS: "mean",
            ITERS: "mean",
        }
    ).reset_index(drop=True)
    summary[IMAGE] = ALL
    summary[SEED] = ALL
    return summary[REPORT_COLUMNS]


def best_p(summary: pd.DataFrame) -> pd.DataFrame:
    """
    Highest mean PSNR over p for each (method, strategy, mr), with the spread
    of the sweep and the distance of the default p from the best.

    ``reference_p_gap_db`` is NaN when the default p was not swept.
    """
    if summary.empty:
        return pd.DataFrame(columns=BEST_P_COLUMNS)
    rows = []
    for (method, strategy, mr), group in summary.groupby([METHOD, STRATEGY, MR], sort=True):
        top = group.loc[group[PSNR_DB].idxmax()]
        at_default = group.loc[(group[P] - constants.DEFAULT_P).abs() < 1e-9, PSNR_DB]
        rows.append(
            {
                METHOD: method,
                STRATEGY: strategy,
                MR: mr,
                BEST_P: top[P],
                PSNR_DB: top[PSNR_DB],
                PSNR_SPREAD_DB: group[PSNR_DB].max() - group[PSNR_DB].min(),
                REFERENCE_P_GAP_DB: top[PSNR_DB] - at_default.iloc[0]
                if len(at_default)
                else float("nan"),
            }
        )
    return pd.DataFrame(rows, columns=BEST_P_COLUMNS)


def flag_p_sensitivity(best: pd.DataFrame) -> pd.DataFrame:
    """Log and return the best_p rows whose sweep is not flat in p."""
    if best.empty:
        return best
    off = (best[PSNR_SPREAD_DB] > constants.P_SENSITIVITY_SPREAD_DB) | (
        best[REFERENCE_P_GAP_DB] > constants.P_SENSITIVITY_GAP_DB
    )
    flagged = best[off].reset_index(drop=True)
    for row in flagged.to_dict("records"):
        logger.warning(
            f"p-sweep {row[METHOD]}/{row[STRATEGY]} at MR {row[MR]:g}: spread "
            f"{row[PSNR_SPREAD_DB]:.2f} dB, p={constants.DEFAULT_P:g} is "
            f"{row[REFERENCE_P_GAP_DB]:.2f} dB below p={row[BEST_P]:g}"
        )
    return flagged


def write_csv(df: pd.DataFrame, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    df.to_csv(path, index=False, float_format=constants.CSV_FLOAT_FORMAT)
    logger.info(f"Wrote {len(df)} row(s) to {path}")
    return path


def write_runs(reports: Sequence[RunReport], path: Path) -> Path:
    return write_csv(reports_frame(reports)[REPORT_COLUMNS], path)


def write_channels(reports: Sequence[RunReport], path: Path) -> Path:
    return write_csv(reports_frame(reports)[CHANNEL_COLUMNS], path)
