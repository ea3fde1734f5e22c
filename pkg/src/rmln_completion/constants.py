"""
Constants for the RMLN completion library.
"""

# Solver defaults (experimental setup of the reference inpainting study)
# lambda = 3e5 as published over-shrinks 8-bit data under this schedule:
# lambda / mu at the last iteration zeroes every singular value below ~110
# (~16 at 3e4).
# 3e4 keeps the published ordering of the weight strategies.
PUBLISHED_LAMBDA = 3e5
DEFAULT_LAMBDA = 3e4
DEFAULT_EPS = 800.0
DEFAULT_MU0 = 1e-3
DEFAULT_RHO = 1.1
DEFAULT_GAMMA = 10.0
DEFAULT_C = 1e-8
DEFAULT_P = 0.8
DEFAULT_OUTER_ITERS = 100
DEFAULT_INNER_ITERS = 5

# 8-bit intensity range
PIXEL_MIN = 0.0
PIXEL_MAX = 255.0
PEAK_8BIT = 255.0

# Metrics
PSNR_CAP_DB = 99.0
SSIM_WINDOW = 11
SSIM_SIGMA = 1.5
SSIM_K1 = 0.01
SSIM_K2 = 0.03

# Numerical tolerances
SVD_TOLERANCE = 1e-8

# CSV formatting: 10 significant digits
CSV_FLOAT_FORMAT = "%.10g"

# Exit codes
EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARTIAL = 2

# Mask image encoding
MASK_OBSERVED_VALUE = 255
MASK_MISSING_VALUE = 0

# Standard MR grid of the random-mask experiments
STANDARD_MISSING_RATIOS = (0.50, 0.65, 0.75)
# p grid of the power-sensitivity study
STANDARD_P_SWEEP = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0)
# Expected flatness of a p-sweep (dB): spread over p and distance of the default p from the best
P_SENSITIVITY_SPREAD_DB = 1.5
P_SENSITIVITY_GAP_DB = 0.3

# Dataset download cache lifetime
DATASET_CACHE_HOURS = 24
