"""
Column names of the scalar surrogate profile CSV.
"""

PROFILE_X = "x"
PROFILE_RANK = "rank"
PROFILE_NUCLEAR = "nuclear"  # |x| / bound, convex envelope of rank
PROFILE_MLN = "mln"
PROFILE_RMLN = "rmln"

PROFILE_COLUMNS = [PROFILE_X, PROFILE_RANK, PROFILE_NUCLEAR, PROFILE_MLN, PROFILE_RMLN]
