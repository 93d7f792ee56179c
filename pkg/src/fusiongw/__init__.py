"""Exact fusion coefficients and Grassmannian Gromov-Witten invariants from
particle models on a circle, with spectral and recursive cross-checks."""

__version__ = "0.1.0"
