r"""
Graph Generators
================

The `generators` module builds the weighted graphs used throughout the
package: rings, paths, stars, the diamond graph, general two-cycle (theta)
graphs, and pairs of triangles joined by a path.

Every generator documents the order in which edges are stored, so that a
weight vector given by the caller lines up with edge indices.

Examples
--------
>>> from cyclecalc.graphs.generators import ring_graph
>>> G = ring_graph(5, 1.0)

Dependencies
------------
This module relies on:
- `networkx`: For path and cycle vertex orderings.
"""
from cyclecalc.graphs.generators.simple_graphs import *
