"""Exact relative cohomology, invariant rings and rank varieties for small Lie superalgebras."""

__version__ = "0.1.0"
