"""
rootlength.system: Subpackage for root-system functionality

This subpackage contains the functionality of the RootSystem class,
organized as mixin classes that each provide one concern.

Modules:
- _io: Fixture loading and construction of the exact root data
- _attributes: Pairings, coweights, weights and root getters
- _weyl: Reflections, Weyl words, dominant forms, orbits and coset representatives
- _polytope: Faces, facets, adjacency and separators of the root polytope
- _length: The length map, decompositions and the positive length
- _export: JSON-ready export and parsing of facets and faces
"""
