"""Exhaustive enumeration, cospectral classes and verification suites."""
