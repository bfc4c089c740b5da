"""Exact and numerical toolkit for the A_alpha = alpha*D + (1-alpha)*A matrix family."""

__version__ = "0.1.0"
