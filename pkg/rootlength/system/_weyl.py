"""
Weyl group actions on coordinate vectors.

Group elements are words in the simple reflections. ``act_word`` applies the
leftmost letter last. Orbits are enumerated from the dominant representative
along canonical words: the word of an element starts with its smallest
descent, which makes it the lexicographically smallest reduced word of the
minimal coset representative.
"""

from __future__ import annotations
from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from rootlength.RootSystem import RootSystem

from fractions import Fraction
from math import factorial
from typing import Iterable

import networkx as nx
from typeguard import typechecked

from rootlength.system._io import expected_root_count
from rootlength.utils import (
    DEFAULT_ORBIT_CAP,
    NotDominantError,
    OrbitCapExceeded,
    WeylWord,
    log_pipeline,
)

Vector = tuple[Fraction | int, ...]


@typechecked
def weyl_group_order(family: str, rank: int) -> int:
    """
    Order of the Weyl group from the closed-form products.

    Examples
    --------
    >>> weyl_group_order("E", 8)
    696729600
    """
    if family == "A":
        return factorial(rank + 1)
    if family in ("B", "C"):
        return 2**rank * factorial(rank)
    if family == "D":
        return 2 ** (rank - 1) * factorial(rank)
    exceptional = {
        ("E", 6): 51840,
        ("E", 7): 2903040,
        ("E", 8): 696729600,
        ("F", 4): 1152,
        ("G", 2): 12,
    }
    return exceptional[(family, rank)]


def inverse_word(w: WeylWord) -> WeylWord:
    return tuple(reversed(w))


class WeylMixin:
    """
    Mixin class providing Weyl group actions, orbits and coset representatives.

    Subsets of simple roots are given as iterables of 1-based indices; ``None``
    stands for the full set of simple roots.
    """

    # hot-path helpers, no type checking
    def _coroot_pairings(self: RootSystem, v) -> tuple:
        return tuple(sum(c * x for c, x in zip(row, v) if c) for row in self._cartan_rows)

    def _reflect(self: RootSystem, i: int, v) -> tuple:
        # s_i(v) = v - (v, alpha_i^vee) alpha_i, only coordinate i moves
        c = sum(a * x for a, x in zip(self._cartan_rows[i], v) if a)
        if c == 0:
            return tuple(v)
        out = list(v)
        out[i] -= c
        return tuple(out)

    def _subset(self: RootSystem, A: Iterable[int] | None) -> tuple[int, ...]:
        if A is None:
            return tuple(range(self.rank))
        out = sorted(set(A))
        for i in out:
            self.check_index(i)
        return tuple(i - 1 for i in out)

    def _act(self: RootSystem, w, v) -> tuple:
        for i in reversed(w):
            v = self._reflect(i - 1, v)
        return tuple(v)

    def _dominant(self: RootSystem, v, gens) -> tuple[tuple, list[int]]:
        v = tuple(v)
        path = []
        c = list(self._coroot_pairings(v))
        while True:
            i = next((j for j in gens if c[j] < 0), None)
            if i is None:
                return v, path
            ci = c[i]
            v = v[:i] + (v[i] - ci,) + v[i + 1 :]
            col = self._cartan_cols[i]
            for j in range(self.rank):
                if col[j]:
                    c[j] -= ci * col[j]
            path.append(i + 1)

    @typechecked
    def reflect_simple(self: RootSystem, i: int, v: Vector) -> Vector:
        """
        Simple reflection ``s_i(v) = v - (v, alpha_i^vee) alpha_i``.

        Parameters
        ----------
        i : int
            Simple root index, 1-based.
        v : tuple
            Coordinate vector.

        Returns
        -------
        tuple
            The reflected vector (integral if ``v`` is).

        Examples
        --------
        >>> RootSystem("A", 2).reflect_simple(1, (0, 1))
        (1, 1)
        """
        self.check_index(i)
        self.check_vector(v)
        return self._reflect(i - 1, v)

    @typechecked
    def act_word(self: RootSystem, w: WeylWord, v: Vector) -> Vector:
        """
        Apply the word ``w = (i_1, ..., i_k)`` as ``s_{i_1} ... s_{i_k}``.

        Examples
        --------
        >>> RootSystem("A", 2).act_word((1, 2), (0, 1))
        (-1, -1)
        """
        self.check_vector(v)
        for i in w:
            self.check_index(i)
        return self._act(w, v)

    @typechecked
    def to_dominant(
        self: RootSystem, v: Vector, A: Iterable[int] | None = None
    ) -> tuple[Vector, WeylWord]:
        """
        Move ``v`` into the dominant chamber of the parabolic subgroup ``W_A``.

        The reduction always applies the smallest-index reflection whose simple
        root pairs negatively with the current vector.

        Parameters
        ----------
        v : tuple
            Coordinate vector.
        A : iterable of int, optional
            Simple roots generating the subgroup; all of them by default.

        Returns
        -------
        tuple
            ``(v_plus, w)`` with ``act_word(w, v) == v_plus`` and
            ``(v_plus, alpha_i) >= 0`` for ``i`` in ``A``.

        Examples
        --------
        >>> RootSystem("A", 2).to_dominant((-1, 0))
        ((1, 1), (2, 1))
        """
        self.check_vector(v)
        top, path = self._dominant(v, self._subset(A))
        return top, tuple(reversed(path))

    @typechecked
    def canonical_word(self: RootSystem, v: Vector, A: Iterable[int] | None = None) -> WeylWord:
        """Canonical word ``w`` of ``W_A`` with ``act_word(w, v_plus) == v``."""
        self.check_vector(v)
        _, path = self._dominant(v, self._subset(A))
        return tuple(path)

    @typechecked
    def orbit_with_words(
        self: RootSystem,
        v: Vector,
        A: Iterable[int] | None = None,
        cap: int | None = None,
    ) -> dict:
        """
        Enumerate the orbit ``W_A v`` together with witness words.

        The orbit is generated breadth-first from the ``A``-dominant
        representative ``v_plus`` along canonical words only, so every element
        is produced exactly once.

        Parameters
        ----------
        v : tuple
            Coordinate vector.
        A : iterable of int, optional
            Generators of the parabolic subgroup; the full Weyl group by default.
        cap : int, optional
            Maximal orbit size (``DEFAULT_ORBIT_CAP``).

        Returns
        -------
        dict
            Maps each orbit element ``u`` to a word ``w`` with
            ``act_word(w, v) == u``. For dominant ``v`` the words are the
            canonical minimal coset representatives.

        Raises
        ------
        OrbitCapExceeded
            If the orbit is larger than ``cap``.

        Examples
        --------
        >>> len(RootSystem("A", 2).orbit_with_words(RootSystem("A", 2).coweight(1)))
        3
        """
        self.check_vector(v)
        cap = DEFAULT_ORBIT_CAP if cap is None else cap
        gens = self._subset(A)
        top, path = self._dominant(v, gens)
        to_top = tuple(reversed(path))
        words = {top: ()}
        frontier = [(top, self._coroot_pairings(top))]
        while frontier:
            following = []
            for u, cu in frontier:
                wu = words[u]
                for i in gens:
                    ci = cu[i]
                    if ci <= 0:
                        continue
                    x = u[:i] + (u[i] - ci,) + u[i + 1 :]
                    col = self._cartan_cols[i]
                    cx = tuple(cu[j] - ci * col[j] if col[j] else cu[j] for j in range(self.rank))
                    # keep x only when i is its smallest descent
                    if next(j for j in gens if cx[j] < 0) != i:
                        continue
                    words[x] = (i + 1,) + wu
                    following.append((x, cx))
                if len(words) > cap:
                    raise OrbitCapExceeded(f"orbit of {list(v)}", cap)
            frontier = following
        if to_top:
            words = {u: w + to_top for u, w in words.items()}
        return words

    @typechecked
    def parabolic_orbit(self: RootSystem, v: Vector, A: Iterable[int]) -> dict:
        """Orbit of ``v`` under ``W_A`` with canonical words, see :meth:`orbit_with_words`."""
        return self.orbit_with_words(v, A)

    @typechecked
    def coset_reps(self: RootSystem, A: Iterable[int] | None = None) -> list[WeylWord]:
        """
        Minimal coset representatives ``W^A`` of ``W / W_A``.

        Words are found as the orbit words of ``sum_{i not in A} omega_i``,
        whose stabilizer is exactly ``W_A``; they are the lexicographically
        smallest reduced words and are returned sorted by (length, word).

        Examples
        --------
        >>> len(RootSystem("B", 3).coset_reps({1, 2}))
        8
        """
        gens = set(self._subset(A))
        key = ("coset_reps", tuple(sorted(gens)))

        def compute():
            rho = [Fraction(0)] * self.rank
            for i in range(self.rank):
                if i not in gens:
                    rho = [r + w for r, w in zip(rho, self.weights[i])]
            words = self.orbit_with_words(tuple(rho))
            reps = sorted(words.values(), key=lambda w: (len(w), w))
            self.add_log({"action": "coset_reps", "params": {"A": sorted(g + 1 for g in gens), "count": len(reps)}})
            log_pipeline(f"{self.name}: {len(reps)} coset representatives for A={sorted(g + 1 for g in gens)}")
            return reps

        return list(self._cached(key, compute))

    @typechecked
    def stabilizer_simple_roots(self: RootSystem, v: Vector) -> frozenset:
        """
        Simple roots orthogonal to a dominant vector (its stabilizer is ``W_A``).

        Raises
        ------
        NotDominantError
            If ``v`` is not dominant.

        Examples
        --------
        >>> RootSystem("B", 3).stabilizer_simple_roots(RootSystem("B", 3).coweight(1))
        frozenset({2, 3})
        """
        self.check_vector(v)
        c = self._coroot_pairings(v)
        if any(x < 0 for x in c):
            raise NotDominantError(f"Vector {list(v)} is not dominant")
        return frozenset(i + 1 for i, x in enumerate(c) if x == 0)

    @typechecked
    def weyl_group_order(self: RootSystem) -> int:
        return weyl_group_order(self.family, self.rank)

    @typechecked
    def parabolic_order(self: RootSystem, A: Iterable[int] | None = None) -> int:
        """
        Order of ``W_A`` as a product over the connected components of ``A``.

        Each component is identified by its rank, whether its simple roots all
        have the same length, and the number of roots supported on it, so the
        result does not depend on orbit enumeration.

        Examples
        --------
        >>> RootSystem("E", 8).parabolic_order(range(1, 8))
        2903040
        """
        gens = set(self._subset(A))
        sub = self.affine_diagram.subgraph(g + 1 for g in gens)
        total = 1
        for comp in nx.connected_components(sub):
            idx = {x - 1 for x in comp}
            count = sum(
                1 for beta in self.roots if all(c == 0 for k, c in enumerate(beta) if k not in idx)
            )
            laced = len({self.gram[i, i] for i in idx}) == 1
            total *= _order_from_root_count(len(idx), count, laced)
        return total


def _order_from_root_count(rank: int, count: int, simply_laced: bool) -> int:
    # B6 and E6 share a root count, lacing separates them
    families = ("A", "D", "E") if simply_laced else ("B", "F", "G")
    for family in families:
        try:
            if expected_root_count(family, rank) == count:
                return weyl_group_order(family, rank)
        except KeyError:
            continue
    raise ValueError(f"No irreducible type of rank {rank} has {count} roots")
