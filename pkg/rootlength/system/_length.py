"""
The length map and minimal decompositions.

The length of ``gamma`` in the root lattice is the least number of roots
summing to it. It equals the maximum over the facets of the root polytope of
the upper integral part of the facet functional, and that maximum is attained
on the dominant conjugate of ``gamma`` by a coordinate facet ``F(alpha)``.
"""

from __future__ import annotations
from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from rootlength.RootSystem import RootSystem

from dataclasses import dataclass
from fractions import Fraction
from math import prod

import numpy as np
from typeguard import typechecked

from rootlength.system._polytope import Facet
from rootlength.utils import (
    DEFAULT_STATE_CAP,
    InvariantViolation,
    LatticeVec,
    StateCapExceeded,
    sub_vec,
)


@dataclass(frozen=True)
class LengthResult:
    """
    Length of ``gamma`` with the facets attaining it.

    ``decomposition`` is ``None`` unless requested; when present it holds
    exactly ``length`` roots summing to ``gamma``.
    """

    gamma: LatticeVec
    length: int
    attaining_facets: tuple[Facet, ...]
    decomposition: tuple[LatticeVec, ...] | None = None


class LengthMixin:
    """
    Mixin class providing the length map, decompositions and positive length.
    """

    def _length_value(self: RootSystem, gamma) -> int:
        if not any(gamma):
            return 0
        top, _ = self._dominant(gamma, tuple(range(self.rank)))
        return max(-(-top[a - 1] // self.marks[a - 1]) for a in self.maximal_roots())

    @typechecked
    def facet_max(self: RootSystem, gamma: LatticeVec) -> Fraction:
        """
        Exact ``max_F (lam_F, gamma)`` over all facets, through the dominant conjugate.

        ``gamma`` lies in the cone over ``F`` exactly when ``(lam_F, gamma)``
        attains this value.

        Examples
        --------
        >>> RootSystem("B", 3).facet_max((1, 2, 3))
        Fraction(3, 2)
        """
        self.check_vector(gamma)
        if not any(gamma):
            return Fraction(0)
        top, _ = self._dominant(gamma, tuple(range(self.rank)))
        return max(Fraction(top[a - 1], self.marks[a - 1]) for a in self.maximal_roots())

    @typechecked
    def length(self: RootSystem, gamma: LatticeVec, with_decomposition: bool = False) -> LengthResult:
        """
        Length of ``gamma`` through the dominant facet shortcut.

        ``|gamma| = max_alpha ceil((omega_alpha^vee, gamma_+) / m_alpha)`` over the
        maximal roots ``alpha``, with ``gamma_+`` the dominant conjugate.

        Parameters
        ----------
        gamma : tuple of int
            Element of the root lattice in simple-root coordinates.
        with_decomposition : bool, default False
            Also compute a minimal decomposition into roots.

        Returns
        -------
        LengthResult
            The length, the canonical facets attaining it and optionally a
            decomposition.

        Raises
        ------
        DimensionError
            If ``gamma`` does not have ``rank`` coordinates.

        Examples
        --------
        >>> RootSystem("B", 3).length((1, 0, 2)).length
        2
        """
        self.check_vector(gamma)
        if not any(gamma):
            return LengthResult(gamma, 0, (), () if with_decomposition else None)
        top, path = self._dominant(gamma, tuple(range(self.rank)))
        word = tuple(path)  # act_word(word, top) == gamma
        values = {
            a: -(-top[a - 1] // self.marks[a - 1]) for a in self.maximal_roots()
        }
        value = max(values.values())
        facets = tuple(
            self._facet_from_functional(a, self._act(word, self._facet_start(a)))
            for a in sorted(values)
            if values[a] == value
        )
        decomposition = self.decompose(gamma) if with_decomposition else None
        return LengthResult(gamma, value, facets, decomposition)

    @typechecked
    def length_by_facets(self: RootSystem, gamma: LatticeVec) -> int:
        """
        Length as ``max_F ceil((lam_F, gamma))`` over every enumerated facet.

        This is the verification path; :meth:`length` is the production one.
        """
        self.check_vector(gamma)
        matrix, denom = self.facet_covectors()
        top = int((matrix @ np.array(gamma, dtype=np.int64)).max())
        return max(0, -(-top // denom))

    @typechecked
    def decompose(self: RootSystem, gamma: LatticeVec) -> tuple[LatticeVec, ...]:
        """
        A minimal decomposition of ``gamma`` into roots.

        Roots are scanned in lexicographic order and the first ``beta`` with
        ``|gamma - beta| = |gamma| - 1`` is taken.

        Returns
        -------
        tuple of tuple of int
            ``|gamma|`` roots summing to ``gamma``; empty for ``gamma = 0``.

        Examples
        --------
        >>> RootSystem("G", 2).decompose((4, 2))
        ((1, 0), (3, 2))
        """
        self.check_vector(gamma)
        current = tuple(gamma)
        remaining = self._length_value(current)
        out = []
        while remaining > 0:
            for beta in self.sorted_roots:
                rest = sub_vec(current, beta)
                if self._length_value(rest) == remaining - 1:
                    out.append(beta)
                    current = rest
                    remaining -= 1
                    break
            else:
                raise InvariantViolation(f"{self.name}: no greedy step from {current}")
        return tuple(out)

    @typechecked
    def positive_length(self: RootSystem, gamma: LatticeVec, cap: int | None = None) -> int:
        """
        Least number of positive roots summing to ``gamma``.

        Shortest-path dynamic programming over the box ``0 <= u <= gamma``,
        processed by height; every partial sum of a positive partition stays in
        the box.

        Parameters
        ----------
        gamma : tuple of int
            Element of the positive root cone ``R+``.
        cap : int, optional
            Largest admissible number of box points (``DEFAULT_STATE_CAP``).

        Raises
        ------
        ValueError
            If ``gamma`` has a negative coordinate.
        StateCapExceeded
            If the box is larger than ``cap``.

        Examples
        --------
        >>> RootSystem("B", 3).positive_length((1, 0, 2))
        3
        """
        self.check_vector(gamma)
        if any(g < 0 for g in gamma):
            raise ValueError(f"{list(gamma)} is not in the positive root cone")
        if not any(gamma):
            return 0
        cap = DEFAULT_STATE_CAP if cap is None else cap
        shape = tuple(g + 1 for g in gamma)
        size = prod(shape)
        if size > cap:
            raise StateCapExceeded(f"positive-length box of {list(gamma)}", cap)

        coords = np.indices(shape).reshape(self.rank, -1)
        height = coords.sum(axis=0)
        strides = np.array([prod(shape[i + 1 :]) for i in range(self.rank)], dtype=np.int64)
        steps = [
            (np.array(beta, dtype=np.int64), int(np.dot(beta, strides)))
            for beta in self.sorted_positive_roots
            if all(b <= g for b, g in zip(beta, gamma))
        ]
        unreached = np.iinfo(np.int32).max
        dp = np.full(size, unreached, dtype=np.int32)
        dp[0] = 0
        for h in range(1, int(height[-1]) + 1):
            idx = np.nonzero(height == h)[0]
            best = np.full(len(idx), unreached, dtype=np.int32)
            block = coords[:, idx]
            for beta, offset in steps:
                sel = (block >= beta[:, None]).all(axis=0)
                if not sel.any():
                    continue
                prev = dp[idx[sel] - offset]
                cand = np.where(prev == unreached, unreached, prev + 1)
                best[sel] = np.minimum(best[sel], cand)
            dp[idx] = best
        return int(dp[-1])

    @typechecked
    def horizontal_length_typeA(self: RootSystem, gamma: LatticeVec) -> int:
        """
        ``h(gamma) = sum_i max(a_i - a_{i-1}, 0)`` with ``a_0 = 0``.

        Raises
        ------
        ValueError
            If the system is not of type A or ``gamma`` has a negative coordinate.

        Examples
        --------
        >>> RootSystem("A", 6).horizontal_length_typeA((2, 3, 3, 0, 4, 1))
        7
        """
        if self.family != "A":
            raise ValueError(f"horizontal length is defined for type A only, not {self.name}")
        self.check_vector(gamma)
        if any(g < 0 for g in gamma):
            raise ValueError(f"{list(gamma)} is not in the positive root cone")
        previous, total = 0, 0
        for a in gamma:
            total += max(a - previous, 0)
            previous = a
        return total
