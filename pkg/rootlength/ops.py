from .RootSystem import build_root_system
from .system._length import LengthResult
from .system._polytope import Facet, FaceSpec
from .operation.monoid import (
    GeneratorReport,
    MonoidCtx,
    certify_generators,
    dominant_inequality,
    dominant_points,
    in_cone,
    in_monoid,
    in_nspan,
    in_span,
    in_zspan,
    invariant_criterion,
    is_integrally_closed,
    is_normal,
    is_proper,
    is_proper_by_definition,
    lattice_contains,
    level,
    minimal_elements,
    minimality_necessary,
    monoid_context,
    parabolic_lattice_basis,
    proper_generators,
    same_lattice,
    slab_points,
    subface_lattice_basis,
    test_inequality,
    zspan_basis,
)
from .operation.oracle import RootSumTable, brute_length, brute_length_witness, brute_positive_length
from .operation.reducible import ReducibleSystem, parse_type
from .operation.verify import SUITES, SuiteReport, run_suite
