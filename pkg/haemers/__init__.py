"""Exact dual subspace representations of graphs and their Mycielski lifts."""

__version__ = "0.1.0"
