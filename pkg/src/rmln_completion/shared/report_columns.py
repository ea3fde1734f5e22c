"""
Column names of the experiment report CSVs (runs, channels, summary, best_p).

runs.csv and summary.csv share REPORT_COLUMNS; channels.csv inserts CHANNEL
after IMAGE.
"""

IMAGE = "image"
CHANNEL = "channel"
METHOD = "method"
STRATEGY = "strategy"
P = "p"
MR = "mr"  # requested MR for random masks, realized missing fraction for block masks
SEED = "seed"
PSNR_DB = "psnr_db"
SSIM = "ssim"
SECONDS = "seconds"
ITERS = "iters"

# Extra columns of best_p.csv
BEST_P = "best_p"
PSNR_SPREAD_DB = "psnr_spread_db"  # max minus min mean PSNR over the swept p
REFERENCE_P_GAP_DB = "reference_p_gap_db"  # best mean PSNR minus the one at the default p

REPORT_COLUMNS = [IMAGE, METHOD, STRATEGY, P, MR, SEED, PSNR_DB, SSIM, SECONDS, ITERS]
CHANNEL_COLUMNS = [IMAGE, CHANNEL, METHOD, STRATEGY, P, MR, SEED, PSNR_DB, SSIM, SECONDS, ITERS]
BEST_P_COLUMNS = [METHOD, STRATEGY, MR, BEST_P, PSNR_DB, PSNR_SPREAD_DB, REFERENCE_P_GAP_DB]

# Placeholder used in aggregated rows
ALL = "*"
