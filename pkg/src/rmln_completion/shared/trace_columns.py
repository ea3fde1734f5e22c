"""
Column names of the per-iteration ADMM trace CSV.
"""

TRACE_K = "k"
TRACE_MU = "mu"  # penalty used in iteration k
TRACE_PRIMAL_RESIDUAL = "primal_residual"  # ||X - Z||_F after iteration k
TRACE_DATA_FIT = "data_fit"  # ||P_Omega(X - Y)||_F after iteration k

TRACE_COLUMNS = [TRACE_K, TRACE_MU, TRACE_PRIMAL_RESIDUAL, TRACE_DATA_FIT]
