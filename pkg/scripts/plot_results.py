"""
Plot experiment CSVs and save PNGs next to them.

- profile CSV (x,rank,nuclear,mln,rmln): the four scalar curves, MLN/RMLN
  min-max normalized onto [0, 1] for display against the rank function.
- summary.csv with several p values: PSNR versus p, one line per strategy/MR.
- trace CSVs (k,mu,primal_residual,data_fit): residuals on a log scale.

    python scripts/plot_results.py results/profile.csv results/p_sweep/summary.csv
"""
from __future__ import annotations

import sys
from pathlib import Path

import matplotlib.pyplot as plt
import pandas as pd

from rmln_completion.shared.profile_columns import (
    PROFILE_MLN,
    PROFILE_NUCLEAR,
    PROFILE_RANK,
    PROFILE_RMLN,
    PROFILE_X,
)
from rmln_completion.shared.report_columns import MR, P, PSNR_DB, STRATEGY
from rmln_completion.shared.trace_columns import TRACE_DATA_FIT, TRACE_K, TRACE_PRIMAL_RESIDUAL


def _normalize(s: pd.Series) -> pd.Series:
    span = s.max() - s.min()
    return (s - s.min()) / span if span > 0 else s * 0


def plot_profile(df: pd.DataFrame, out_path: Path) -> None:
    fig, ax = plt.subplots(figsize=(6, 4), constrained_layout=True)
    ax.step(df[PROFILE_X], df[PROFILE_RANK], where="mid", label="rank")
    ax.plot(df[PROFILE_X], df[PROFILE_NUCLEAR], label="nuclear / M")
    ax.plot(df[PROFILE_X], _normalize(df[PROFILE_MLN]), label="MLN (normalized)")
    ax.plot(df[PROFILE_X], _normalize(df[PROFILE_RMLN]), label="RMLN (normalized)")
    ax.set_xlabel("x")
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.savefig(out_path)
    plt.close(fig)


def plot_p_sweep(df: pd.DataFrame, out_path: Path) -> None:
    fig, ax = plt.subplots(figsize=(6, 4), constrained_layout=True)
    for (strategy, mr), group in df.groupby([STRATEGY, MR]):
        group = group.sort_values(P)
        ax.plot(group[P], group[PSNR_DB], marker="o", label=f"{strategy}, MR={mr:g}")
    ax.set_xlabel("p")
    ax.set_ylabel("PSNR (dB)")
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.savefig(out_path)
    plt.close(fig)


def plot_trace(df: pd.DataFrame, title: str, out_path: Path) -> None:
    fig, ax = plt.subplots(figsize=(6, 4), constrained_layout=True)
    ax.semilogy(df[TRACE_K], df[TRACE_PRIMAL_RESIDUAL], label="||X - Z||_F")
    ax.semilogy(df[TRACE_K], df[TRACE_DATA_FIT], label="||P_Omega(X - Y)||_F")
    ax.set_xlabel("k")
    ax.set_title(title)
    ax.grid(True, alpha=0.3)
    ax.legend()
    fig.savefig(out_path)
    plt.close(fig)


def main(paths: list[str]) -> None:
    if not paths:
        print(__doc__)
        return
    for name in paths:
        path = Path(name)
        try:
            df = pd.read_csv(path)
        except Exception as e:
            print(f"Skipping {path}: failed to read CSV ({e})")
            continue

        out_path = path.with_suffix(".png")
        columns = set(df.columns)
        if {PROFILE_X, PROFILE_RANK, PROFILE_MLN}.issubset(columns):
            plot_profile(df, out_path)
        elif {P, PSNR_DB, STRATEGY}.issubset(columns) and df[P].nunique() > 1:
            plot_p_sweep(df, out_path)
        elif {TRACE_K, TRACE_PRIMAL_RESIDUAL}.issubset(columns):
            plot_trace(df, path.stem, out_path)
        else:
            print(f"Skipping {path}: no plot for columns {sorted(columns)}")
            continue
        print(f"Saved plot: {out_path}")


if __name__ == "__main__":
    main(sys.argv[1:])
