"""
Monoids generated by the roots of a face of the root polytope.

For a face ``F`` with roots ``V = V(F)`` this module decides membership in

* ``N(F)``, the monoid generated by ``V``;
* ``Z(F)``, the lattice generated by ``V`` (Hermite normal form basis);
* ``C(V(F))``, the rational cone over ``F``;
* ``M(F) = C(V(F)) ∩ R``.

It enumerates the ``<=_F``-minimal elements of ``M(F)`` inside a level slab,
decides which of them are proper (not in the cone of a border face), and
checks normality (``C ∩ Z = N``) and integral closure (``M = N``).

Facets are handled in standard position ``F(alpha)`` over the
``(Delta - alpha)``-dominant points, whose ``W_{Delta - alpha}``-orbits give
everything else; lower faces are scanned over a lattice box. Results for
``F(A; tau)`` are the ``tau``-images of those for ``F(A)``.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import ceil, floor, lcm, prod

import networkx as nx
import numpy as np
import sympy
from sympy.matrices.normalforms import hermite_normal_form
from typeguard import typechecked

from rootlength.RootSystem import RootSystem
from rootlength.system._polytope import Facet, FaceSpec, SeparatorData
from rootlength.system._weyl import inverse_word
from rootlength.utils import (
    DEFAULT_LEVEL_BOUND,
    DEFAULT_SLAB_CAP,
    InvariantViolation,
    LatticeVec,
    NotInMonoidError,
    RatVec,
    SlabCapExceeded,
    add_vec,
    common_denominator,
    format_rational,
    log_pipeline,
    sub_vec,
)


@dataclass(frozen=True)
class MonoidCtx:
    """
    Everything needed to answer monoid questions about one face.

    ``delta`` is a maximal root in ``A``; the face lies in the facet
    ``F(delta; tau)`` whose functional ``lam`` gives the level. ``zbasis`` is a
    Hermite-normal-form basis of ``Z(V(F))``.
    """

    rs: RootSystem = field(compare=False, repr=False)
    face: FaceSpec
    delta: int
    vroots: tuple[LatticeVec, ...]
    lam: RatVec
    dual: RatVec
    zbasis: tuple[LatticeVec, ...]
    separators: SeparatorData | None = field(default=None, compare=False, repr=False)

    @property
    def is_facet(self) -> bool:
        return len(self.face.A) == 1

    @property
    def alpha(self) -> int:
        return self.delta

    @property
    def tau(self):
        return self.face.tau

    def label(self) -> str:
        A = ",".join(str(a) for a in sorted(self.face.A))
        return f"{self.rs.name} F({A}; {list(self.tau)})"


@dataclass(frozen=True)
class GeneratorReport:
    """Proper minimal elements of a facet with the route that certified them."""

    facet: Facet
    generators: tuple[LatticeVec, ...]
    certificate: str
    level_bound: Fraction
    stable: bool | None = None
    candidates: int = 0

    def to_dict(self) -> dict:
        return {
            "facet": {"alpha": self.facet.alpha, "tau": list(self.facet.tau)},
            "generators": [list(g) for g in self.generators],
            "certificate": self.certificate,
            "level_bound": format_rational(self.level_bound),
            "stable": self.stable,
            "candidates": self.candidates,
        }


################################################################################
# lattices
################################################################################
@typechecked
def zspan_basis(vectors: list) -> tuple[LatticeVec, ...]:
    """
    Basis of the lattice spanned by integer vectors, from the Hermite normal form.

    Raises
    ------
    InvariantViolation
        If the basis does not have the exact rank of the vectors or misses one
        of them.

    Examples
    --------
    >>> zspan_basis([(0, 1, 2), (1, 1, 2), (1, 2, 2)])
    ((1, 0, 0), (0, 1, 0), (0, 0, 2))
    """
    matrix = sympy.Matrix([list(v) for v in vectors]).T
    rank = matrix.rank()
    hnf = hermite_normal_form(matrix)
    basis = tuple(
        tuple(int(hnf[i, j]) for i in range(hnf.rows))
        for j in range(hnf.cols)
        if any(hnf[i, j] != 0 for i in range(hnf.rows))
    )
    if len(basis) != rank:
        raise InvariantViolation(f"Hermite normal form has {len(basis)} columns for rank {rank}")
    for v in vectors:
        if not lattice_contains(basis, tuple(v)):
            raise InvariantViolation(f"Hermite normal form basis misses {list(v)}")
    return tuple(sorted(basis, reverse=True))


@lru_cache(maxsize=4096)
def _left_inverse(basis: tuple) -> tuple[sympy.Matrix, sympy.Matrix]:
    columns = sympy.Matrix([list(b) for b in basis]).T
    gram = columns.T * columns
    return columns, gram.inv() * columns.T


@typechecked
def lattice_contains(basis: tuple, gamma: tuple) -> bool:
    """
    Exact membership of ``gamma`` in the lattice with the given basis.

    The coefficients are found with the rational left inverse of the basis
    matrix and must be integral and reproduce ``gamma``.
    """
    if not basis:
        return not any(gamma)
    columns, left = _left_inverse(tuple(tuple(b) for b in basis))
    target = sympy.Matrix(list(gamma))
    coefficients = left * target
    if any(not c.is_integer for c in coefficients):
        return False
    return columns * coefficients == target


@typechecked
def same_lattice(first: tuple, second: tuple) -> bool:
    """Whether two bases span the same lattice."""
    return all(lattice_contains(second, b) for b in first) and all(
        lattice_contains(first, b) for b in second
    )


@typechecked
def parabolic_lattice_basis(rs: RootSystem, A: frozenset) -> tuple[LatticeVec, ...]:
    """
    The basis ``(Delta - A) + {beta_A}`` of ``Z(V(A))``.

    Examples
    --------
    >>> parabolic_lattice_basis(RootSystem("B", 3), frozenset({3}))
    ((1, 0, 0), (0, 1, 0), (0, 1, 2))
    """
    beta = rs.closure_data(A).beta
    simple = [rs.simple_root(i) for i in range(1, rs.rank + 1) if i not in A]
    return tuple(simple) + (beta,)


@typechecked
def subface_lattice_basis(rs: RootSystem, outer: FaceSpec, inner: FaceSpec) -> tuple[LatticeVec, ...]:
    """
    Basis of ``Z(V(outer)) ∩ span(inner)`` for a subface ``inner`` of ``outer``.

    The pair is moved to a standard pair ``F(B) ⊆ F(A)`` by an element
    ``tau x`` with ``x`` in ``W_{A*}``, where the basis is
    ``(Delta - B) + {beta_A + sum_{b in B - A} (m_b - (beta_A)_b) alpha_b}``.

    Raises
    ------
    ValueError
        If ``inner`` is not contained in ``outer``.
    """
    if not rs.face_contains(outer, inner):
        raise ValueError(f"{inner} is not a subface of {outer}")
    A, B = outer.A, inner.A
    star = rs.closure_data(A).star
    rho = rs._rho(rs.closure_data(B).boundary)
    u = rs._act(inverse_word(outer.tau) + inner.tau, rho)
    _, path = rs._dominant(u, tuple(sorted(i - 1 for i in star)))
    word = outer.tau + tuple(path)
    beta = list(rs.closure_data(A).beta)
    for b in B - A:
        beta[b - 1] = rs.marks[b - 1]
    standard = [rs.simple_root(i) for i in range(1, rs.rank + 1) if i not in B] + [tuple(beta)]
    return tuple(rs._act(word, v) for v in standard)


################################################################################
# context
################################################################################
@typechecked
def monoid_context(rs: RootSystem, target: Facet | FaceSpec) -> MonoidCtx:
    """
    Build (and cache on ``rs``) the monoid context of a proper face.

    Parameters
    ----------
    rs : RootSystem
        The root system.
    target : Facet or FaceSpec
        The face; it is canonicalized first.

    Raises
    ------
    ValueError
        If the face is the whole polytope.

    Examples
    --------
    >>> ctx = monoid_context(RootSystem("B", 3), FaceSpec(frozenset({3})))
    >>> len(ctx.vroots)
    3
    """
    spec = target.face if isinstance(target, Facet) else target
    spec = rs.face(spec.A, spec.tau)
    if not spec.A:
        raise ValueError("The whole polytope has no monoid context")

    def compute():
        maximal = [a for a in sorted(spec.A) if a in rs.maximal_roots()]
        if not maximal:
            raise InvariantViolation(f"{rs.name}: A={sorted(spec.A)} contains no maximal root")
        delta = maximal[0]
        lam = rs._act(spec.tau, rs._facet_start(delta))
        vroots = tuple(sorted(rs.face_roots(spec)))
        dual = rs._dual(lam)
        for v in vroots:
            if sum(d * x for d, x in zip(dual, v)) != 1:
                raise InvariantViolation(f"{rs.name}: root {v} is off the level-one hyperplane")
        separators = rs.psi_and_nabla(delta) if len(spec.A) == 1 else None
        ctx = MonoidCtx(rs, spec, delta, vroots, lam, dual, zspan_basis(list(vroots)), separators)
        rs.add_log({"action": "monoid_context", "params": spec.to_dict()})
        return ctx

    return rs._cached(("monoid_context", spec), compute)


def _standard(ctx: MonoidCtx) -> MonoidCtx:
    if not ctx.tau:
        return ctx
    return monoid_context(ctx.rs, FaceSpec(ctx.face.A))


@typechecked
def level(ctx: MonoidCtx, gamma: LatticeVec) -> Fraction:
    """The level ``(lam_F, gamma)``."""
    ctx.rs.check_vector(gamma)
    return sum((d * g for d, g in zip(ctx.dual, gamma) if g), Fraction(0))


################################################################################
# membership
################################################################################
@typechecked
def in_nspan(ctx: MonoidCtx, gamma: LatticeVec) -> tuple[bool, tuple | None]:
    """
    Membership in ``N(F)`` with a witness.

    Every root of ``F`` has level 1, so a representation uses exactly
    ``(lam_F, gamma)`` roots; the search is a depth-first search of that depth,
    roots taken in nondecreasing order and failures memoized.

    Returns
    -------
    tuple
        ``(True, roots)`` with ``roots`` summing to ``gamma``, or
        ``(False, None)``.

    Examples
    --------
    >>> ctx = monoid_context(RootSystem("B", 3), FaceSpec(frozenset({3})))
    >>> in_nspan(ctx, (1, 2, 4))[0]
    True
    """
    k = level(ctx, gamma)
    if k < 0 or k.denominator != 1:
        return False, None
    vroots = ctx.vroots
    lo = [min(v[i] for v in vroots) for i in range(len(gamma))]
    hi = [max(v[i] for v in vroots) for i in range(len(gamma))]
    failed = set()

    def search(rest, depth, start):
        if depth == 0:
            return () if not any(rest) else None
        if (rest, start) in failed:
            return None
        if any(x < depth * a or x > depth * b for x, a, b in zip(rest, lo, hi)):
            failed.add((rest, start))
            return None
        for j in range(start, len(vroots)):
            found = search(sub_vec(rest, vroots[j]), depth - 1, j)
            if found is not None:
                return (vroots[j],) + found
        failed.add((rest, start))
        return None

    witness = search(tuple(gamma), int(k), 0)
    return (witness is not None), witness


@typechecked
def in_zspan(ctx: MonoidCtx, gamma: LatticeVec) -> bool:
    """
    Membership in ``Z(F)`` through the Hermite-normal-form basis.

    Examples
    --------
    >>> ctx = monoid_context(RootSystem("B", 3), FaceSpec(frozenset({3})))
    >>> in_zspan(ctx, (1, 2, 3))
    False
    """
    ctx.rs.check_vector(gamma)
    return lattice_contains(ctx.zbasis, gamma)


@typechecked
def in_span(ctx: MonoidCtx, gamma: LatticeVec) -> bool:
    """
    Whether the ``A``-coordinates of ``tau^-1 gamma`` are proportional to the
    marks. On the cone of the containing facet this is membership in the span
    of the face.
    """
    rs = ctx.rs
    u = rs._act(inverse_word(ctx.tau), gamma)
    ratios = {Fraction(u[a - 1], rs.marks[a - 1]) for a in ctx.face.A}
    return len(ratios) == 1


@typechecked
def in_cone(ctx: MonoidCtx, gamma: LatticeVec) -> bool:
    """
    Membership in the rational cone ``C(V(F))``.

    For a facet, ``gamma`` is in the cone iff its functional attains
    ``max_F' (lam_F', gamma)``. A lower face additionally requires ``gamma``
    to lie in its span, which cuts the cone of the containing facet
    ``F(delta; tau)`` down to the face.

    Examples
    --------
    >>> ctx = monoid_context(RootSystem("B", 3), FaceSpec(frozenset({3})))
    >>> in_cone(ctx, (1, 2, 3))
    True
    """
    if not any(gamma):
        return True
    if not in_span(ctx, gamma):
        return False
    value = level(ctx, gamma)
    return value > 0 and value == ctx.rs.facet_max(gamma)


def in_monoid(ctx: MonoidCtx, gamma: LatticeVec) -> bool:
    return in_cone(ctx, gamma)


################################################################################
# slabs
################################################################################
def _box_points(ctx: MonoidCtx, bound: Fraction, cap: int) -> list[LatticeVec]:
    # standard face F(A): the A-coordinates are fixed by the level, the others
    # range over the level multiple of the coordinate range of V(A)
    rs = ctx.rs
    A = ctx.face.A
    n = rs.rank
    vroots = np.array(ctx.vroots, dtype=np.int64)
    lo, hi = vroots.min(axis=0), vroots.max(axis=0)
    matrix, denom = rs.facet_covectors()
    own = np.zeros(n, dtype=np.int64)
    own[ctx.delta - 1] = denom // rs.marks[ctx.delta - 1]
    free = [i for i in range(n) if i + 1 not in A]
    m0 = rs.marks[ctx.delta - 1]
    points, scanned = [], 0
    for j in range(1, floor(bound * m0) + 1):
        k = Fraction(j, m0)
        fixed = {a - 1: k * rs.marks[a - 1] for a in A}
        if any(x.denominator != 1 for x in fixed.values()):
            continue
        lows = [ceil(k * int(lo[i])) for i in free]
        highs = [floor(k * int(hi[i])) for i in free]
        if any(a > b for a, b in zip(lows, highs)):
            continue
        shape = tuple(b - a + 1 for a, b in zip(lows, highs))
        size = prod(shape)
        scanned += size
        if scanned > cap:
            raise SlabCapExceeded(f"slab of {ctx.label()} up to level {bound}", cap)
        chunk = max(1, 2**20 // max(1, len(matrix)))
        for start in range(0, size, chunk):
            flat = np.arange(start, min(size, start + chunk))
            block = np.empty((len(flat), n), dtype=np.int64)
            for i, x in fixed.items():
                block[:, i] = int(x)
            if free:
                grid = np.unravel_index(flat, shape)
                for pos, i in enumerate(free):
                    block[:, i] = grid[pos] + lows[pos]
            values = block @ matrix.T
            mask = (block @ own) == values.max(axis=1)
            points.extend(tuple(p) for p in block[mask].tolist())
    return points


@typechecked
def slab_points(ctx: MonoidCtx, bound: Fraction | int, cap: int | None = None) -> list[LatticeVec]:
    """
    Every nonzero point of ``M(F)`` with level at most ``bound``.

    A vectorized lattice-box scan of the standard face, mapped by ``tau``.

    Raises
    ------
    SlabCapExceeded
        If more than ``cap`` box points would be scanned.
    """
    cap = DEFAULT_SLAB_CAP if cap is None else cap
    std = _standard(ctx)
    points = _box_points(std, Fraction(bound), cap)
    log_pipeline(f"{ctx.label()}: {len(points)} slab points up to level {bound}")
    if ctx.tau:
        points = [ctx.rs._act(ctx.tau, p) for p in points]
    return sorted(points, key=lambda p: (level(ctx, p), p))


def _weight_data(ctx: MonoidCtx, bound: Fraction):
    rs, alpha = ctx.rs, ctx.alpha
    m = rs.marks[alpha - 1]
    pairings = [rs._coroot_pairings(v) for v in ctx.vroots]
    hi = [max(p[e] for p in pairings) for e in range(rs.rank)]
    lo = [min(p[e] for p in pairings) for e in range(rs.rank)]
    weight_level = [rs.weights[e][alpha - 1] / m for e in range(rs.rank)]
    ranges = []
    for e in range(rs.rank):
        if e == alpha - 1:
            ranges.append((ceil(bound * min(lo[e], 0)), floor(bound * max(hi[e], 0))))
        else:
            ranges.append((0, floor(bound * max(hi[e], 0))))
    denom = common_denominator(x for w in rs.weights for x in w)
    scaled = [[int(x * denom) for x in w] for w in rs.weights]
    return weight_level, ranges, denom, scaled


def _weights_to_root(rs: RootSystem, c, denom: int, scaled) -> LatticeVec | None:
    total = [0] * rs.rank
    for ce, row in zip(c, scaled):
        if ce:
            for j in range(rs.rank):
                total[j] += ce * row[j]
    if any(x % denom for x in total):
        return None
    return tuple(x // denom for x in total)


def _enumerate_weights(ctx: MonoidCtx, bound: Fraction, constraints):
    """
    Branch and bound over weight coordinates ``c`` in the box of
    ``_weight_data`` with ``sum coefficient_e c_e <= limit`` for every
    ``(coefficient, limit)`` in ``constraints``.
    """
    rs, alpha = ctx.rs, ctx.alpha
    _, ranges, denom, scaled = _weight_data(ctx, bound)
    order = [alpha - 1] + [e for e in range(rs.rank) if e != alpha - 1]
    # floor_rest[k][pos]: least value constraint k can still gain from order[pos:]
    floor_rest = []
    for coefficient, _ in constraints:
        rest = [Fraction(0)] * (rs.rank + 1)
        for pos in range(rs.rank - 1, -1, -1):
            e = order[pos]
            a, b = ranges[e]
            rest[pos] = rest[pos + 1] + min(coefficient[e] * a, coefficient[e] * b)
        floor_rest.append(rest)
    c = [0] * rs.rank

    def walk(pos, partials):
        if pos == rs.rank:
            u = _weights_to_root(rs, c, denom, scaled)
            if u is not None:
                yield u
            return
        e = order[pos]
        a, b = ranges[e]
        for x in range(a, b + 1):
            values = [p + coefficient[e] * x for p, (coefficient, _) in zip(partials, constraints)]
            violated = [
                k
                for k, (value, (_, limit)) in enumerate(zip(values, constraints))
                if value + floor_rest[k][pos + 1] > limit
            ]
            if violated:
                if any(constraints[k][0][e] >= 0 for k in violated):
                    break
                continue
            c[e] = x
            yield from walk(pos + 1, values)
        c[e] = 0

    yield from walk(0, [Fraction(0)] * len(constraints))


def dominant_points(ctx: MonoidCtx, bound: Fraction | int) -> list[LatticeVec]:
    """
    The ``(Delta - alpha)``-dominant nonzero points of ``M(F(alpha))`` with level
    at most ``bound``, for a facet in standard position.
    """
    std = _standard(ctx)
    if not std.is_facet:
        raise ValueError("dominant points are defined for facets")
    bound = Fraction(bound)
    weight_level, _, _, _ = _weight_data(std, bound)
    out = []
    for u in _enumerate_weights(std, bound, [(weight_level, bound)]):
        value = level(std, u)
        if 0 < value <= bound and value == std.rs.facet_max(u):
            out.append(u)
    log_pipeline(f"{std.label()}: {len(out)} dominant points up to level {bound}")
    return sorted(out, key=lambda p: (level(std, p), p))


def _is_minimal(ctx: MonoidCtx, gamma) -> bool:
    return not any(in_cone(ctx, sub_vec(gamma, v)) for v in ctx.vroots)


def _expand(ctx: MonoidCtx, dominant) -> list[LatticeVec]:
    rs = ctx.rs
    rest = [i for i in range(1, rs.rank + 1) if i != ctx.alpha]
    out = set()
    for g in dominant:
        out.update(rs.orbit_with_words(g, rest))
    if ctx.tau:
        out = {rs._act(ctx.tau, g) for g in out}
    return sorted(out, key=lambda p: (level(ctx, p), p))


@typechecked
def minimal_elements(
    ctx: MonoidCtx, level_bound: Fraction | int = DEFAULT_LEVEL_BOUND, cap: int | None = None
) -> frozenset:
    """
    The nonzero ``<=_F``-minimal elements of ``M(F)`` up to ``level_bound``.

    ``gamma`` is minimal iff ``gamma - v`` is not in ``M(F)`` for every root
    ``v`` of the face. Facets are searched over ``(Delta - alpha)``-dominant
    points and expanded by ``W_{Delta - alpha}``; lower faces over the slab.

    Raises
    ------
    ValueError
        If ``level_bound < 1``.
    SlabCapExceeded
        If a lower-face slab exceeds ``cap``.

    Examples
    --------
    >>> ctx = monoid_context(RootSystem("B", 3), FaceSpec(frozenset({3})))
    >>> sorted(minimal_elements(ctx))
    [(1, 2, 3)]
    """
    if level_bound < 1:
        raise ValueError("level bound must be at least 1")
    if ctx.is_facet:
        std = _standard(ctx)
        dominant = [g for g in dominant_points(std, level_bound) if _is_minimal(std, g)]
        return frozenset(_expand(ctx, dominant))
    points = slab_points(ctx, level_bound, cap)
    present = set(points)
    present.add(tuple([0] * ctx.rs.rank))
    return frozenset(
        g for g in points if not any(sub_vec(g, v) in present for v in ctx.vroots)
    )


################################################################################
# proper elements
################################################################################
def _facet_separators(ctx: MonoidCtx) -> SeparatorData:
    if not ctx.is_facet:
        raise ValueError("proper elements are defined for facets")
    return ctx.separators


@typechecked
def is_proper(ctx: MonoidCtx, gamma: LatticeVec) -> bool:
    """
    Whether ``gamma`` in ``M(F)`` lies in no border face of the facet.

    Criterion: ``0 < (nabla_{alpha,delta}, gamma_+)`` for every ``delta`` in
    ``Psi_alpha``, with ``gamma_+`` the ``(Delta - alpha)``-dominant conjugate
    of ``tau^-1 gamma``.

    Raises
    ------
    NotInMonoidError
        If ``gamma`` is not in ``M(F)``.

    Examples
    --------
    >>> ctx = monoid_context(RootSystem("G", 2), FaceSpec(frozenset({1})))
    >>> is_proper(ctx, (2, 1))
    True
    """
    sep = _facet_separators(ctx)
    if not in_cone(ctx, gamma):
        raise NotInMonoidError(f"{list(gamma)} is not in M of {ctx.label()}")
    if not any(gamma):
        return False
    rs = ctx.rs
    u = rs._act(inverse_word(ctx.tau), gamma)
    rest = tuple(i - 1 for i in range(1, rs.rank + 1) if i != ctx.alpha)
    top, _ = rs._dominant(u, rest)
    return all(rs.pairing(sep.nabla[d], top) > 0 for d in sep.psi)


@typechecked
def is_proper_by_definition(ctx: MonoidCtx, gamma: LatticeVec) -> bool:
    """
    Properness from the geometry: ``gamma`` is strictly inside every ridge
    hyperplane ``lam_F - lam_F' = 0`` with ``F'`` sharing a ridge with ``F``.
    """
    if not ctx.is_facet:
        raise ValueError("proper elements are defined for facets")
    if not in_cone(ctx, gamma):
        raise NotInMonoidError(f"{list(gamma)} is not in M of {ctx.label()}")
    if not any(gamma):
        return False
    rs = ctx.rs
    facet = rs._facet_from_functional(ctx.alpha, ctx.lam)
    own = level(ctx, gamma)
    return all(own - other.value(gamma) > 0 for other in rs.geometric_adjacent(facet))


@typechecked
def minimality_necessary(ctx: MonoidCtx, delta: int) -> tuple[bool, bool]:
    """
    The necessary conditions ``1/lcm(m_alpha, m_delta) < D_l(delta)`` and
    ``< D_s(delta)`` for a proper minimal element (``D_s`` missing counts as
    infinite).
    """
    sep = _facet_separators(ctx)
    if delta not in sep.psi:
        raise ValueError(f"alpha_{delta} is not in Psi_{ctx.alpha}")
    rs = ctx.rs
    step = Fraction(1, lcm(rs.marks[ctx.alpha - 1], rs.marks[delta - 1]))
    short = sep.d_short[delta]
    return step < sep.d_long[delta], short is None or step < short


@typechecked
def dominant_inequality(ctx: MonoidCtx, gamma: LatticeVec, delta: int, tau: tuple) -> bool:
    """
    ``(nabla_{alpha,delta}, gamma) <= (nabla^tau_{alpha,delta}, gamma)`` for a
    ``(Delta - alpha)``-dominant ``gamma`` and ``tau`` in ``W_{Delta - alpha}``.
    """
    rs, alpha = ctx.rs, ctx.alpha
    if alpha in tau:
        raise ValueError(f"tau must avoid s_{alpha}")
    own = rs._facet_start(alpha)
    other = rs._facet_start(delta)
    nabla = tuple(a - b for a, b in zip(own, other))
    moved = tuple(a - b for a, b in zip(own, rs._act(tau, other)))
    return rs.pairing(nabla, gamma) <= rs.pairing(moved, gamma)


def theta_node(rs: RootSystem) -> int | None:
    """The simple root ``nu`` with ``theta`` a multiple of ``omega_nu`` (None in type A)."""
    nodes = [i + 1 for i, c in enumerate(rs._coroot_pairings(rs.theta)) if c]
    return nodes[0] if len(nodes) == 1 else None


def dynkin_path(rs: RootSystem, start: int, end: int) -> list[int]:
    """The segment ``[start, end]`` of the Dynkin diagram."""
    diagram = rs.affine_diagram.subgraph(range(1, rs.rank + 1))
    return list(nx.shortest_path(diagram, start, end))


def _test_coefficients(ctx: MonoidCtx, delta: int) -> list[Fraction]:
    rs = ctx.rs
    nu = theta_node(rs)
    if nu is None:
        raise ValueError(f"The test inequality needs a system not of type A, got {rs.name}")
    path = set(dynkin_path(rs, delta, nu))
    nabla = ctx.separators.nabla[delta]
    m = rs.marks[delta - 1]
    return [
        rs.pairing(nabla, rs.weights[e]) + (Fraction(1, m) if e + 1 in path else 0)
        for e in range(rs.rank)
    ]


@typechecked
def test_inequality(ctx: MonoidCtx, gamma: LatticeVec, delta: int) -> tuple[Fraction, bool]:
    """
    ``(nabla_{alpha,delta}, gamma) + (1/m_delta) sum_{e in [delta, nu]} c_e`` and
    whether it is below ``D_l(delta)``, for ``gamma = sum c_e omega_e``.

    Examples
    --------
    >>> ctx = monoid_context(RootSystem("G", 2), FaceSpec(frozenset({1})))
    >>> test_inequality(ctx, (2, 1), 2)
    (Fraction(1, 6), True)
    """
    sep = _facet_separators(ctx)
    if delta not in sep.psi:
        raise ValueError(f"alpha_{delta} is not in Psi_{ctx.alpha}")
    c = ctx.rs._coroot_pairings(gamma)
    value = sum((t * x for t, x in zip(_test_coefficients(ctx, delta), c)), Fraction(0))
    return value, value < sep.d_long[delta]


@typechecked
def invariant_criterion(ctx: MonoidCtx, gamma: LatticeVec) -> bool:
    """
    Proper minimality of a ``W_{Delta - alpha}``-invariant ``gamma`` in ``M(F(alpha))``.

    True iff some ``delta_s`` and ``delta_l`` in ``Psi_alpha`` give
    ``0 < (nabla_{alpha,delta_s}, gamma) < D_s(delta_s)`` and
    ``0 < (nabla_{alpha,delta_l}, gamma) < D_l(delta_l)``.

    Raises
    ------
    ValueError
        If ``gamma`` is not invariant.
    NotInMonoidError
        If ``gamma`` is not in ``M(F)``.
    """
    sep = _facet_separators(ctx)
    rs = ctx.rs
    pairings = rs._coroot_pairings(gamma)
    if any(x for i, x in enumerate(pairings) if i != ctx.alpha - 1):
        raise ValueError(f"{list(gamma)} is not invariant under W_(Delta - alpha_{ctx.alpha})")
    if not in_cone(ctx, gamma):
        raise NotInMonoidError(f"{list(gamma)} is not in M of {ctx.label()}")
    values = {d: rs.pairing(sep.nabla[d], gamma) for d in sep.psi}
    long_ok = any(0 < values[d] < sep.d_long[d] for d in sep.psi)
    short_ok = any(
        0 < values[d] and (sep.d_short[d] is None or values[d] < sep.d_short[d])
        for d in sep.psi
    )
    return long_ok and short_ok


################################################################################
# generators
################################################################################
@typechecked
def proper_generators(
    ctx: MonoidCtx, level_bound: Fraction | int = DEFAULT_LEVEL_BOUND
) -> GeneratorReport:
    """
    Proper minimal elements of a facet by exhaustive search.

    All ``(Delta - alpha)``-dominant points up to ``level_bound + 1`` are
    enumerated once; the proper and minimal ones up to ``level_bound`` are
    expanded by ``W_{Delta - alpha}``. ``stable`` records that nothing new
    appears in ``(level_bound, level_bound + 1]``.

    Examples
    --------
    >>> ctx = monoid_context(RootSystem("G", 2), FaceSpec(frozenset({1})))
    >>> proper_generators(ctx).generators
    ((2, 1), (4, 2))
    """
    if not ctx.is_facet:
        raise ValueError("proper generators are computed for facets")
    std = _standard(ctx)
    bound = Fraction(level_bound)
    points = dominant_points(std, bound + 1)
    found = [g for g in points if is_proper(std, g) and _is_minimal(std, g)]
    within = [g for g in found if level(std, g) <= bound]
    facet = ctx.rs._facet_from_functional(ctx.alpha, ctx.lam)
    report = GeneratorReport(
        facet,
        tuple(_expand(ctx, within)),
        "slab-exhaustive",
        bound,
        stable=len(found) == len(within),
        candidates=len(points),
    )
    log_pipeline(f"{ctx.label()}: {len(report.generators)} proper generators")
    return report


@typechecked
def certify_generators(
    ctx: MonoidCtx, level_bound: Fraction | int = DEFAULT_LEVEL_BOUND
) -> GeneratorReport:
    """
    Proper minimal elements of a facet from the minimality criteria.

    Only ``delta`` in ``Psi_alpha`` meeting the long necessary condition can
    certify minimality against ``theta``; for each such ``delta`` the
    ``(Delta - alpha)``-dominant candidates satisfying the test inequality are
    enumerated, and each one is decided exactly (root lattice, cone,
    properness, minimality against every root of the facet). If no ``delta``
    meets the long or the short necessary condition the facet has no proper
    minimal element at all.

    Examples
    --------
    >>> ctx = monoid_context(RootSystem("B", 3), FaceSpec(frozenset({3})))
    >>> certify_generators(ctx).generators
    ((1, 2, 3),)
    """
    sep = _facet_separators(ctx)
    std = _standard(ctx)
    facet = ctx.rs._facet_from_functional(ctx.alpha, ctx.lam)
    bound = Fraction(level_bound)
    checks = {d: minimality_necessary(std, d) for d in sep.psi}
    long_ok = [d for d in sep.psi if checks[d][0]]
    if not long_ok or not any(s for _, s in checks.values()):
        return GeneratorReport(facet, (), "criterion", bound, candidates=0)

    weight_level, _, _, _ = _weight_data(std, bound)
    candidates = set()
    for d in long_ok:
        constraints = [(weight_level, bound), (_test_coefficients(std, d), sep.d_long[d])]
        for u in _enumerate_weights(std, bound, constraints):
            if test_inequality(std, u, d)[1]:
                candidates.add(u)
    survivors = []
    for u in sorted(candidates):
        value = level(std, u)
        if not (0 < value <= bound) or not in_cone(std, u):
            continue
        if is_proper(std, u) and _is_minimal(std, u):
            survivors.append(u)
    log_pipeline(f"{ctx.label()}: {len(candidates)} criterion candidates, {len(survivors)} survive")
    return GeneratorReport(
        facet, tuple(_expand(ctx, survivors)), "criterion", bound, candidates=len(candidates)
    )


################################################################################
# normality
################################################################################
def _nspan_slab(ctx: MonoidCtx, bound: Fraction) -> set:
    layer = {tuple([0] * ctx.rs.rank)}
    reached = set()
    for _ in range(floor(bound)):
        layer = {add_vec(x, v) for x in layer for v in ctx.vroots}
        reached |= layer
    return reached


def _face_points(ctx: MonoidCtx, bound: Fraction, cap: int | None) -> tuple[MonoidCtx, list]:
    std = _standard(ctx)
    if std.is_facet:
        return std, dominant_points(std, bound)
    return std, _box_points(std, bound, DEFAULT_SLAB_CAP if cap is None else cap)


@typechecked
def is_normal(
    ctx: MonoidCtx, level_bound: Fraction | int = 4, cap: int | None = None
) -> tuple[bool, LatticeVec | None]:
    """
    Bounded check of ``C(V(F)) ∩ Z(F) = N(F)``.

    Returns
    -------
    tuple
        ``(True, None)`` or ``(False, gamma)`` with ``gamma`` in ``C ∩ Z`` but
        not in ``N(F)``.

    Examples
    --------
    >>> ctx = monoid_context(RootSystem("B", 3), FaceSpec(frozenset({3})))
    >>> is_normal(ctx, 4)
    (True, None)
    """
    bound = Fraction(level_bound)

    def compute():
        std, points = _face_points(ctx, bound, cap)
        reached = None if std.is_facet else _nspan_slab(std, bound)
        for g in points:
            if not in_zspan(std, g):
                continue
            member = in_nspan(std, g)[0] if reached is None else g in reached
            if not member:
                return g
        return None

    # one computation per standard face, transported by tau
    found = ctx.rs._cached(("is_normal", ctx.face.A, bound), compute)
    return (True, None) if found is None else (False, ctx.rs._act(ctx.tau, found))


@typechecked
def is_integrally_closed(
    ctx: MonoidCtx, level_bound: Fraction | int = 4, cap: int | None = None
) -> tuple[bool, LatticeVec | None]:
    """
    Bounded check of ``M(F) = N(F)`` for a facet.

    Returns
    -------
    tuple
        ``(True, None)`` or ``(False, gamma)`` with ``gamma`` of least level
        in ``M(F)`` but not in ``N(F)``.

    Examples
    --------
    >>> ctx = monoid_context(RootSystem("B", 3), FaceSpec(frozenset({3})))
    >>> is_integrally_closed(ctx, 4)
    (False, (1, 2, 3))
    """
    if not ctx.is_facet:
        raise ValueError("integral closure is checked for facets")
    bound = Fraction(level_bound)

    def compute():
        std, points = _face_points(ctx, bound, cap)
        return next((g for g in points if not in_nspan(std, g)[0]), None)

    found = ctx.rs._cached(("is_integrally_closed", ctx.face.A, bound), compute)
    return (True, None) if found is None else (False, ctx.rs._act(ctx.tau, found))
