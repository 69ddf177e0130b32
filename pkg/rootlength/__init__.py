"""
rootlength: Exact lengths in root lattices

This package computes the least number of roots summing to an element of the
root lattice of an irreducible root system, from the facets of the root
polytope, and checks the structure behind that formula: faces and facets of
the polytope, the monoids generated by the roots of a face, their generators,
normality and integral closure, and the positive length.

Key Features:
- Exact root data for every irreducible type in Bourbaki numbering
- Weyl group orbits, dominant forms and minimal coset representatives
- Faces, facets, adjacency and half-space presentation of the root polytope
- Length, minimal decompositions, positive length
- Monoid membership, proper minimal elements, normality, integral closure
- Brute-force oracles and acceptance suites with JSON reports

Examples
--------
>>> from rootlength import RootSystem
>>> rs = RootSystem("B", 3)
>>> rs.length((1, 0, 2)).length
2
>>> rs.positive_length((1, 0, 2))
3
"""

__version__ = "0.1.0"

from .RootSystem import RootSystem
from .ops import *

__all__ = ["RootSystem", "ops", "__version__"]
