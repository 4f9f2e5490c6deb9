"""Spectral bounds for graphs and their complements.

Laplacian (L = D - A) and signless Laplacian (Q = D + A) spectra, exact
characteristic polynomials, quotient matrices, and exhaustive checks of
Nordhaus-Gaddum type inequalities.
"""

from .graph import Graph
from .graph6 import parse_graph6, write_graph6
from .families import construct, parse_family
from .spectra import MatrixKind, eig_symmetric, key_values, spectrum
from .bounds import BOUNDS, EPS, BoundReport, EqualityClass, evaluate

__all__ = [
    "Graph", "parse_graph6", "write_graph6", "construct", "parse_family", "MatrixKind",
    "eig_symmetric", "key_values", "spectrum", "BOUNDS", "EPS", "BoundReport",
    "EqualityClass", "evaluate",
]
__version__ = "0.1.0"
