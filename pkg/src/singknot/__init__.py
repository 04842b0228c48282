"""Singular Jones and Alexander polynomials of singular link diagrams."""

__version__ = "0.1.0"
