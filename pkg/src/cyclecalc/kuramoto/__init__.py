r"""
Kuramoto Module
===============

The `kuramoto` module classifies fixed points of the Kuramoto model by the
inertia of their Jacobian Laplacian, and analyses the forced ring with one
long link.

Key Features
------------
- **Fixed points**: :class:`PhaseConfiguration`, :func:`fixed_point_residual`,
  :func:`jacobian_graph` and :func:`classify_fixed_point`.
- **Ring**: :func:`h_n`, :func:`omega_profile`, :func:`longest_stable_link`,
  :func:`ring_table` and :func:`ring_scan`.

Examples
--------
>>> from cyclecalc.kuramoto import classify_fixed_point, twisted_state
>>> classify_fixed_point(twisted_state(9, 0.15)).unstable_dim
0
"""
from cyclecalc.kuramoto.fixed_points import *
from cyclecalc.kuramoto.ring import *
