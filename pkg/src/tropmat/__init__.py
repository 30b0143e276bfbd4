"""Exact computations with valuated matroids, tropical linear spaces and their symmetries."""

__version__ = "0.1.0"
