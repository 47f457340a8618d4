"""Obstruction pipeline for Lagrangian concordance of 3-braid closures."""

__version__ = "0.1.0"
