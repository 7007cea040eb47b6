r"""
CycleCalc: Spectral Index of Signed Graph Laplacians via the Cycle Space
=======================================================================

CycleCalc computes the number of positive, zero, and negative eigenvalues of
Laplacians of graphs whose edge weights may carry either sign. Besides the
direct eigenvalue count, it offers the dual computation through the cycle
space of the graph: a cycle basis built from a spanning tree, the cycle
intersection form, and the finite covering tree used to relate the two.

The same machinery classifies fixed points of the Kuramoto phase model,
whose Jacobian is the Laplacian of a signed graph, and reproduces the
longest-stable-link analysis for twisted states on rings.

Key Features
------------
- **Weighted graphs**: Simple graphs with signed edge weights, edge-list and
  JSON readers, incidence matrices, spanning forests and fundamental cycles.
- **Covering trees**: The fundamental domain of the universal cover and the
  projection matrices relating it to the graph.
- **Spectral index**: Laplacian inertia, cycle forms, index bounds, the
  mixed-cycle reduction, reduced determinants and closed-form thresholds.
- **Kuramoto tools**: Fixed-point residuals, Jacobian graphs, stability
  classification and ring scans.
- **Oracle**: A Jacobi eigensolver, seeded random generators and brute-force
  reference computations.

Submodules
----------
- `graphs`: Weighted graph representation, cycle machinery and generators.
- `covering`: Covering-tree constructions.
- `spectral`: Laplacian inertia and the cycle-space index formula.
- `kuramoto`: Fixed-point classification and ring analysis.
- `oracle`: Independent reference computations.
- `data`: Tabular and JSON export helpers.
- `cli`: The ``cyclecalc`` command-line interface.

Dependencies
------------
CycleCalc relies on:
- `numpy`: For numerical computations.
- `networkx`: For graph traversal and connectivity.
- `scipy`: For orthonormal bases and bracketed root finding.
- `pandas`: For tabular output.
- `click`: For the command-line interface.

"""

__version__ = "0.1.0"
