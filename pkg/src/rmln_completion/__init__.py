"""Reweighted matrix logarithmic norm (RMLN) matrix completion."""

__version__ = "0.1.0"
