"""Exact computation with graded algebras admitting a triangular decomposition.

Computes the degree-zero core of such an algebra, its standard/cellular
datum and cell modules, decomposition and Cartan matrices with their
cellularity/quasi-heredity obstructions, truncated quasi-hereditary
algebras with quiver presentations, and highest-weight-cover diagnostics.
"""

__version__ = "0.1.0"
