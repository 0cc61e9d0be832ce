"""Exact extra edge-connectivity, super status and fault persistence."""

__version__ = "0.1.0"
