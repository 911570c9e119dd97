"""Extremal graphs for long cycles: bounds, constructions, recognizers and census tools."""

from .graph import EdgeId, Graph

__version__ = "0.1.0"

__all__ = ["EdgeId", "Graph", "__version__"]
