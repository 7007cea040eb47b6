r"""
Oracle Module
=============

Independent reference computations used to validate the cycle-space path:
a cyclic Jacobi eigensolver with inertia counts, seeded random generators
for graphs and matrices, and brute-force Laplacian indices.

Examples
--------
>>> from cyclecalc.oracle import RandomGraphSpec, random_connected_graph, brute_force_index
>>> G = random_connected_graph(RandomGraphSpec(seed=7))
>>> brute_force_index(G).dimension == G.n_vertices
True
"""
from cyclecalc.oracle.eigen import *
from cyclecalc.oracle.random_graphs import *
from cyclecalc.oracle.reference import *
