"""Exact computation of the Tutte symmetric function XB of vertex-weighted
graphs, its relatives, equal-invariant pair constructions and a small-graph
census."""

from .graph import Edge, GraphError, VWGraph
from .symfunc import BivarPoly, PPoly

__all__ = ["Edge", "GraphError", "VWGraph", "BivarPoly", "PPoly"]
__version__ = "0.1.0"
