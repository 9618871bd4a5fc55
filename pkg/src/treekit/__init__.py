"""Exact spanning-tree counting and squared-rectangle analysis."""

__version__ = "0.1.0"
