r"""
Spectral Module
===============

The `spectral` module computes the inertia of weighted Laplacians, directly
and through the cycle space.

Key Features
------------
- **Laplacians**: :func:`laplacian`, :func:`inertia`, :func:`det_red`.
- **Cycle form**: :func:`cycle_form`, :func:`index_via_cycles`,
  :func:`index_bounds`, :func:`mixed_cycle_reduction` and
  :func:`detred_identity_check`.
- **Thresholds**: Closed-form critical weights for rings, two-cycle graphs
  and the diamond graph.
- **Lemmas**: Haynsworth, Sylvester and rank-one determinant checks.

Examples
--------
>>> from cyclecalc.graphs.generators import diamond_graph
>>> from cyclecalc.spectral import index_via_cycles
>>> index_via_cycles(diamond_graph(e=-0.2)).inertia.n_plus
0
"""
from cyclecalc.spectral.laplacian import *
from cyclecalc.spectral.cycle_form import *
from cyclecalc.spectral.thresholds import *
from cyclecalc.spectral.lemmas import *
