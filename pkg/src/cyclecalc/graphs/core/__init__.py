r"""
Core Module
===========

The `core` module provides the weighted-graph representation used across
`cyclecalc`, together with the combinatorial cycle machinery built on it.

Key Features
------------
- **Weighted graphs**: :class:`WeightedGraph`, text and JSON readers and writers.
- **Incidence and components**: Signed incidence matrices and sign-filtered components.
- **Cycle space**: BFS spanning forests, fundamental cycle bases, cycle and tree sets.

Examples
--------
>>> from cyclecalc.graphs.core import *
>>> G = load_graph("0 1 1.0\n1 2 1.0\n2 0 -0.4")
>>> cycle_rank(G)
1
>>> spanning_tree(G).non_tree_edges
(2,)
"""
from cyclecalc.graphs.core.basics import *
from cyclecalc.graphs.core.cycles import *
