"""Exact golden-ratio arithmetic, hat-monotile patches and a numeric claims audit."""

__version__ = "0.1.0"
