"""
rootlength.operation: Free functions over a RootSystem

Modules:
- monoid: Monoids, lattices and cones of faces, minimal and proper elements
- oracle: Brute-force length and positive length
- reducible: Products of irreducible root systems
- verify: Acceptance suites
"""
