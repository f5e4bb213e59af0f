"""Exact distance graphs of graph products."""
__version__ = "0.1.0"
