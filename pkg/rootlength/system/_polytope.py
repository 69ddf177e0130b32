"""
Faces and facets of the root polytope.

The polytope is the convex hull of the roots. Its faces are the parabolic
faces ``F(A; tau) = tau F(A)`` where ``F(A)`` is the face on which every
``omega_a^vee / m_a`` (``a`` in ``A``) takes the value 1. Canonical faces have
``A`` in the index set I (``(Delta - A) + {alpha_0}`` connected in the affine
diagram) and ``tau`` a canonical minimal representative of ``W / W_{A*}``.
Facets are the orbits of ``omega_a^vee / m_a`` over the maximal roots ``a``.
"""

from __future__ import annotations
from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from rootlength.RootSystem import RootSystem

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable

import networkx as nx
import numpy as np
import sympy
from typeguard import typechecked

from rootlength.system._weyl import inverse_word
from rootlength.utils import (
    InvariantViolation,
    LatticeVec,
    RatVec,
    WeylWord,
    common_denominator,
    log_pipeline,
)


@dataclass(frozen=True)
class FaceSpec:
    """A parabolic face ``F(A; tau)``."""

    A: frozenset
    tau: WeylWord = ()

    def to_dict(self) -> dict:
        return {"A": sorted(self.A), "tau": list(self.tau)}


@dataclass(frozen=True)
class Facet:
    """
    A facet ``F(alpha; tau)`` with functional ``lam = tau omega_alpha^vee / m_alpha``.

    ``dual`` holds ``G lam`` so that ``(lam, gamma) = sum(dual_i gamma_i)``.
    """

    alpha: int
    tau: WeylWord
    lam: RatVec
    dual: RatVec = field(compare=False, repr=False)

    @property
    def face(self) -> FaceSpec:
        return FaceSpec(frozenset({self.alpha}), self.tau)

    def value(self, gamma) -> Fraction:
        return sum((d * g for d, g in zip(self.dual, gamma) if g), Fraction(0))


@dataclass(frozen=True)
class ClosureData:
    A: frozenset
    boundary: frozenset
    closure: frozenset
    star: frozenset
    beta: LatticeVec


@dataclass(frozen=True)
class Adjacency:
    facet: Facet
    via: int
    autointersection: bool


@dataclass(frozen=True)
class SeparatorData:
    """
    Separating-hyperplane data of the facet ``F(alpha)``.

    ``d_short[delta]`` is ``None`` when the facet carries no short roots.
    """

    alpha: int
    psi: tuple[int, ...]
    nabla: dict = field(hash=False)
    d_long: dict = field(hash=False)
    d_short: dict = field(hash=False)
    autointersection: int | None = None


class PolytopeMixin:
    """
    Mixin class providing the face structure of the root polytope.

    Heavy results (facets, face roots, closure data) are cached on the
    instance; canonical words make every result deterministic.
    """

    ################################################################################
    # index set
    ################################################################################
    def _simple_set(self: RootSystem) -> frozenset:
        return frozenset(range(1, self.rank + 1))

    def _as_subset(self: RootSystem, A: Iterable[int]) -> frozenset:
        A = frozenset(A)
        for a in A:
            self.check_index(a)
        return A

    @typechecked
    def in_I(self: RootSystem, A: Iterable[int]) -> bool:
        """
        Whether ``(Delta - A) + {alpha_0}`` is connected in the affine diagram.

        Examples
        --------
        >>> RootSystem("B", 3).in_I({2})
        False
        """
        A = self._as_subset(A)
        nodes = {0} | (self._simple_set() - A)
        return nx.is_connected(self.affine_diagram.subgraph(nodes))

    @typechecked
    def maximal_roots(self: RootSystem) -> list[int]:
        """
        Simple roots ``alpha`` with ``{alpha}`` in I; they index the facet orbits.

        Examples
        --------
        >>> RootSystem("E", 8).maximal_roots()
        [1, 2]
        """
        return list(self._cached("maximal_roots", lambda: [a for a in range(1, self.rank + 1) if self.in_I({a})]))

    @typechecked
    def index_set(self: RootSystem) -> list[frozenset]:
        """All ``A`` in I, sorted by size then elements."""

        def compute():
            out = []
            for k in range(self.rank + 1):
                for A in combinations(range(1, self.rank + 1), k):
                    if self.in_I(A):
                        out.append(frozenset(A))
            return out

        return list(self._cached("index_set", compute))

    @typechecked
    def closure_data(self: RootSystem, A: Iterable[int]) -> ClosureData:
        """
        Boundary, closure, star and lowest root of ``A``.

        ``C`` is the connected component of ``alpha_0`` in
        ``(Delta - A) + {alpha_0}``; the closure is the complement of ``C``, the
        boundary the elements of ``A`` adjacent to ``C``, the star the
        complement of the boundary, and ``beta_A`` the dominance-minimal root
        with ``(omega_a^vee, beta) = m_a`` for ``a`` in ``A``.

        Returns
        -------
        ClosureData

        Raises
        ------
        InvariantViolation
            If ``beta_A`` is not unique or violates the level conditions.

        Examples
        --------
        >>> RootSystem("B", 3).closure_data({3}).beta
        (0, 1, 2)
        """
        A = self._as_subset(A)

        def compute():
            nodes = {0} | (self._simple_set() - A)
            comp = nx.node_connected_component(self.affine_diagram.subgraph(nodes), 0)
            closure = frozenset(self._simple_set() - comp)
            boundary = frozenset(
                a for a in A if any(nb in comp for nb in self.affine_diagram.neighbors(a))
            )
            star = self._simple_set() - boundary
            beta = self._lowest_root(A)
            for a in range(1, self.rank + 1):
                at_top = beta[a - 1] == self.marks[a - 1]
                if at_top != (a in closure):
                    raise InvariantViolation(
                        f"{self.name}: beta_A={beta} for A={sorted(A)} breaks the level "
                        f"condition at alpha_{a}"
                    )
            return ClosureData(A, boundary, closure, frozenset(star), beta)

        return self._cached(("closure_data", A), compute)

    def _lowest_root(self: RootSystem, A: frozenset) -> LatticeVec:
        candidates = [
            b for b in self.sorted_roots if all(b[a - 1] == self.marks[a - 1] for a in A)
        ]
        if not candidates:
            raise InvariantViolation(f"{self.name}: V(A) is empty for A={sorted(A)}")
        minimal = [
            b
            for b in candidates
            if not any(c != b and all(x <= y for x, y in zip(c, b)) for c in candidates)
        ]
        if len(minimal) != 1:
            raise InvariantViolation(
                f"{self.name}: {len(minimal)} dominance-minimal roots for A={sorted(A)}"
            )
        return minimal[0]

    ################################################################################
    # faces
    ################################################################################
    def _rho(self: RootSystem, support: Iterable[int]) -> RatVec:
        rho = [Fraction(0)] * self.rank
        for i in support:
            rho = [r + w for r, w in zip(rho, self.weights[i - 1])]
        return tuple(rho)

    @typechecked
    def face(self: RootSystem, A: Iterable[int], tau: WeylWord = ()) -> FaceSpec:
        """
        Canonical form of the face ``F(A; tau)``.

        ``A`` is replaced by its closure (the unique member of I describing the
        same face) and ``tau`` by the canonical representative of its coset
        modulo ``W_{A*}``.

        Raises
        ------
        InvariantViolation
            If the closure is not in I.

        Examples
        --------
        >>> RootSystem("A", 2).face({1}, (2,))
        FaceSpec(A=frozenset({1}), tau=())
        """
        data = self.closure_data(A)
        if not self.in_I(data.closure):
            raise InvariantViolation(
                f"{self.name}: closure {sorted(data.closure)} of {sorted(data.A)} is not in I"
            )
        for i in tau:
            self.check_index(i)
        rho = self._rho(data.boundary)
        u = self._act(tau, rho)
        _, path = self._dominant(u, tuple(range(self.rank)))
        return FaceSpec(data.closure, tuple(path))

    @typechecked
    def face_roots(self: RootSystem, spec: FaceSpec) -> frozenset:
        """
        The roots ``V(F)`` lying on the face ``F(A; tau)``.

        Computed twice, as the roots whose ``tau``-inverse image reaches level
        ``m_a`` for each ``a`` in ``A`` and as the ``tau``-image of the roots
        dominating ``beta_A``; the two must agree.

        Raises
        ------
        InvariantViolation
            If the two characterizations differ.

        Examples
        --------
        >>> sorted(RootSystem("B", 3).face_roots(FaceSpec(frozenset({3}))))
        [(0, 1, 2), (1, 1, 2), (1, 2, 2)]
        """

        def compute():
            beta = self.closure_data(spec.A).beta
            inv = inverse_word(spec.tau)
            by_level = frozenset(
                b
                for b in self.roots
                if all(self._act(inv, b)[a - 1] == self.marks[a - 1] for a in spec.A)
            )
            by_beta = frozenset(
                self._act(spec.tau, b)
                for b in self.roots
                if all(x >= y for x, y in zip(b, beta))
            )
            if by_level != by_beta:
                raise InvariantViolation(
                    f"{self.name}: face roots of {spec} differ between characterizations"
                )
            return by_level

        return self._cached(("face_roots", spec), compute)

    @typechecked
    def faces(self: RootSystem, proper_only: bool = True) -> list[FaceSpec]:
        """
        Every face ``F(A; tau)``, ``A`` in I and ``tau`` in ``W^{A*}``.

        Parameters
        ----------
        proper_only : bool, default True
            Skip ``A`` empty (the whole polytope).
        """
        out = []
        for A in self.index_set():
            if proper_only and not A:
                continue
            star = self.closure_data(A).star
            out.extend(FaceSpec(A, w) for w in self.coset_reps(star))
        return out

    @typechecked
    def count_faces(self: RootSystem) -> dict:
        """Number of faces ``F(A; tau)`` for each ``A`` in I, keyed by sorted tuple."""
        return {
            tuple(sorted(A)): len(self.coset_reps(self.closure_data(A).star))
            for A in self.index_set()
        }

    @typechecked
    def codimension(self: RootSystem, spec: FaceSpec) -> int:
        """Codimension of a face from the exact rank of its roots' span."""
        vectors = sorted(self.face_roots(spec))
        rank = sympy.Matrix(vectors).rank()
        return self.rank - rank + 1

    @typechecked
    def barycenter(self: RootSystem, A: Iterable[int]) -> RatVec:
        """
        Exact barycenter of ``V(A)``; dominant with stabilizer ``W_{A*}``.

        Raises
        ------
        InvariantViolation
            If the barycenter is not dominant or its stabilizer is not ``A*``.

        Examples
        --------
        >>> RootSystem("A", 2).barycenter({1})
        (Fraction(1, 1), Fraction(1, 2))
        """
        A = self._as_subset(A)
        if not self.in_I(A):
            raise ValueError(f"A={sorted(A)} is not in the index set of {self.name}")
        roots = self.face_roots(FaceSpec(A))
        n = len(roots)
        b = tuple(Fraction(sum(r[i] for r in roots), n) for i in range(self.rank))
        if self.stabilizer_simple_roots(b) != self.closure_data(A).star:
            raise InvariantViolation(f"{self.name}: barycenter stabilizer differs from A* for A={sorted(A)}")
        return b

    @typechecked
    def face_contains(self: RootSystem, outer: FaceSpec, inner: FaceSpec) -> bool:
        """
        Whether ``inner = F(B; sigma)`` lies in ``outer = F(A; tau)``.

        True iff ``B`` contains ``A`` and ``tau^-1 sigma`` lies in
        ``W_{A*} W_{B*}``; the double-coset test reduces
        ``tau^-1 sigma rho_B`` to its ``A*``-dominant form, where ``rho_B`` is
        a dominant vector with stabilizer exactly ``W_{B*}``.

        Examples
        --------
        >>> rs = RootSystem("A", 2)
        >>> rs.face_contains(FaceSpec(frozenset({2})), FaceSpec(frozenset({1, 2})))
        True
        """
        if not inner.A >= outer.A:
            return False
        star = self.closure_data(outer.A).star
        rho = self._rho(self.closure_data(inner.A).boundary)
        u = self._act(inverse_word(outer.tau) + inner.tau, rho)
        top, _ = self._dominant(u, tuple(sorted(i - 1 for i in star)))
        return top == rho

    ################################################################################
    # facets
    ################################################################################
    def _dual(self: RootSystem, lam) -> RatVec:
        return tuple(
            sum((lam[i] * self.gram[i, j] for i in range(self.rank) if lam[i]), Fraction(0))
            for j in range(self.rank)
        )

    def _facet_start(self: RootSystem, alpha: int) -> RatVec:
        m = self.marks[alpha - 1]
        return tuple(x / m for x in self.coweights[alpha - 1])

    @typechecked
    def facet_of(self: RootSystem, alpha: int, tau: WeylWord = ()) -> Facet:
        """The facet ``F(alpha; tau)`` with its canonical word."""
        if alpha not in self.maximal_roots():
            raise ValueError(f"alpha_{alpha} is not a maximal root of {self.name}")
        lam = self._act(tau, self._facet_start(alpha))
        return self._facet_from_functional(alpha, lam)

    def _facet_from_functional(self: RootSystem, alpha: int, lam) -> Facet:
        _, path = self._dominant(lam, tuple(range(self.rank)))
        return Facet(alpha, tuple(path), tuple(lam), self._dual(lam))

    @typechecked
    def enumerate_facets(self: RootSystem) -> list[Facet]:
        """
        All facets, one per maximal root and minimal coset representative.

        Returns
        -------
        list of Facet
            Sorted by ``alpha`` then (word length, word).

        Raises
        ------
        OrbitCapExceeded
            If an orbit exceeds the configured cap.
        InvariantViolation
            If two facets share a functional.

        Examples
        --------
        >>> len(RootSystem("B", 3).enumerate_facets())
        14
        """

        def compute():
            facets = []
            for alpha in self.maximal_roots():
                orbit = self.orbit_with_words(self._facet_start(alpha))
                for lam, word in sorted(orbit.items(), key=lambda kv: (len(kv[1]), kv[1])):
                    facets.append(Facet(alpha, word, lam, self._dual(lam)))
            if len({f.lam for f in facets}) != len(facets):
                raise InvariantViolation(f"{self.name}: facet functionals are not distinct")
            self.add_log({"action": "enumerate_facets", "params": {"count": len(facets)}})
            log_pipeline(f"{self.name}: {len(facets)} facets")
            return facets

        return list(self._cached("facets", compute))

    def facet_covectors(self: RootSystem) -> tuple[np.ndarray, int]:
        """
        Integer matrix ``D * dual`` of every facet and the common denominator ``D``.

        Row ``k`` pairs with an integer vector to ``D (lam_k, gamma)``.
        """

        def compute():
            facets = self.enumerate_facets()
            denom = common_denominator(x for f in facets for x in f.dual)
            matrix = np.array([[int(x * denom) for x in f.dual] for f in facets], dtype=np.int64)
            return matrix, denom

        return self._cached("facet_covectors", compute)

    @typechecked
    def halfspace_presentation(self: RootSystem) -> list[RatVec]:
        """
        Functionals of all facets, certified against the roots.

        Raises
        ------
        InvariantViolation
            If the half-space certificate fails.
        """
        functionals = [f.lam for f in self.enumerate_facets()]
        if not self.check_halfspace_certificate(functionals):
            raise InvariantViolation(f"{self.name}: half-space certificate failed")
        self.add_log({"action": "halfspace_presentation", "params": {"count": len(functionals)}})
        return functionals

    @typechecked
    def check_halfspace_certificate(self: RootSystem, functionals: list) -> bool:
        """
        Every root lies in every half-space ``(lam, u) <= 1`` and every
        functional is tight on at least one root.
        """
        if not functionals:
            return False
        duals = [self._dual(tuple(Fraction(x) for x in lam)) for lam in functionals]
        denom = common_denominator(x for d in duals for x in d)
        matrix = np.array([[int(x * denom) for x in d] for d in duals], dtype=np.int64)
        roots = np.array(self.sorted_roots, dtype=np.int64)
        values = matrix @ roots.T
        return bool((values <= denom).all() and (values == denom).any(axis=1).all())

    @typechecked
    def tight_roots(self: RootSystem, facet: Facet) -> frozenset:
        """Roots on which the facet functional equals 1."""
        return frozenset(b for b in self.roots if facet.value(b) == 1)

    @typechecked
    def adjacent_facets(self: RootSystem, alpha: int) -> list[Adjacency]:
        """
        Facets sharing a ridge with ``F(alpha)``.

        Type (i): ``F(delta; tau)`` for maximal ``delta != alpha`` with
        ``{alpha, delta}`` in I and ``tau`` in ``W_{Delta - alpha}``. Type (ii),
        the autointersection: ``F(alpha; tau s_alpha)`` for ``tau`` in
        ``W_{Delta - alpha}``, present when a non-maximal ``epsilon`` has
        ``{alpha, epsilon}`` in I.

        Returns
        -------
        list of Adjacency
            Sorted by (alpha, word length, word) of the adjacent facet.

        Examples
        --------
        >>> [a.facet.alpha for a in RootSystem("A", 2).adjacent_facets(1)]
        [2, 2]
        """
        maximal = self.maximal_roots()
        if alpha not in maximal:
            raise ValueError(f"alpha_{alpha} is not a maximal root of {self.name}")
        rest = sorted(self._simple_set() - {alpha})
        found: dict = {}
        for delta in maximal:
            if delta == alpha or not self.in_I({alpha, delta}):
                continue
            for lam in self.parabolic_orbit(self._facet_start(delta), rest):
                found[lam] = Adjacency(self._facet_from_functional(delta, lam), delta, False)
        eps = self._autointersection_root(alpha)
        if eps is not None:
            start = self._reflect(alpha - 1, self._facet_start(alpha))
            for lam in self.parabolic_orbit(start, rest):
                found[lam] = Adjacency(self._facet_from_functional(alpha, lam), eps, True)
        return sorted(
            found.values(), key=lambda a: (a.facet.alpha, len(a.facet.tau), a.facet.tau)
        )

    def _autointersection_root(self: RootSystem, alpha: int) -> int | None:
        maximal = set(self.maximal_roots())
        eps = [
            e
            for e in range(1, self.rank + 1)
            if e not in maximal and self.in_I({alpha, e})
        ]
        if len(eps) > 1:
            raise InvariantViolation(f"{self.name}: several autointersection roots for alpha_{alpha}")
        return eps[0] if eps else None

    @typechecked
    def geometric_adjacent(self: RootSystem, facet: Facet) -> list[Facet]:
        """
        Facets whose shared roots with ``facet`` span a ridge.

        A ridge has affine dimension ``rank - 2``, so its roots span a linear
        subspace of dimension ``rank - 1``. Used to cross-check
        :meth:`adjacent_facets`.
        """

        def compute():
            own = self.tight_roots(facet)
            out = []
            for other in self.enumerate_facets():
                if other.lam == facet.lam:
                    continue
                shared = sorted(own & self.tight_roots(other))
                if shared and sympy.Matrix(shared).rank() == self.rank - 1:
                    out.append(other)
            return tuple(out)

        return list(self._cached(("geometric_adjacent", facet.lam), compute))

    @typechecked
    def orbit_split(self: RootSystem, alpha: int) -> tuple[frozenset, frozenset]:
        """
        Long and short roots of ``F(alpha)`` as parabolic orbits.

        ``V_l`` is the ``W_{Delta - alpha}``-orbit of ``theta``; ``V_s`` is the
        orbit of ``theta_s`` when ``(omega_alpha^vee, theta_s) = m_alpha``,
        empty otherwise.
        """
        rest = sorted(self._simple_set() - {alpha})
        long_part = frozenset(self.parabolic_orbit(self.theta, rest))
        short_part: frozenset = frozenset()
        if self.theta_s is not None and self.theta_s[alpha - 1] == self.marks[alpha - 1]:
            short_part = frozenset(self.parabolic_orbit(self.theta_s, rest))
        return long_part, short_part

    @typechecked
    def psi_and_nabla(self: RootSystem, alpha: int) -> SeparatorData:
        """
        Separators between ``F(alpha)`` and its adjacent facets.

        ``Psi_alpha`` holds the maximal ``delta != alpha`` with ``{alpha, delta}``
        in I, plus the autointersection root ``epsilon`` when there is one.
        ``nabla_delta = omega_alpha^vee / m_alpha - omega_delta^vee / m_delta``;
        ``d_long`` and ``d_short`` are its maxima over the long and short roots
        of the facet (``None`` when there are no short roots).

        Examples
        --------
        >>> RootSystem("G", 2).psi_and_nabla(1).psi
        (2,)
        """
        if alpha not in self.maximal_roots():
            raise ValueError(f"alpha_{alpha} is not a maximal root of {self.name}")

        def compute():
            psi = [
                d
                for d in self.maximal_roots()
                if d != alpha and self.in_I({alpha, d})
            ]
            eps = self._autointersection_root(alpha)
            if eps is not None:
                psi.append(eps)
            roots = self.face_roots(FaceSpec(frozenset({alpha})))
            long_roots = [b for b in roots if self.squared_length(b) == 2]
            short_roots = [b for b in roots if self.squared_length(b) != 2]
            own = self._facet_start(alpha)
            nabla, d_long, d_short = {}, {}, {}
            for d in sorted(psi):
                m = self.marks[d - 1]
                vec = tuple(a - b / m for a, b in zip(own, self.coweights[d - 1]))
                nabla[d] = vec
                d_long[d] = max(self.pairing(vec, b) for b in long_roots)
                d_short[d] = max(self.pairing(vec, b) for b in short_roots) if short_roots else None
            return SeparatorData(alpha, tuple(sorted(psi)), nabla, d_long, d_short, eps)

        return self._cached(("psi_and_nabla", alpha), compute)
