"""
Root-system attribute access and the invariant pairing.

This module provides the exact scalar product, fundamental (co)weights,
root membership and a few getters, together with the action log helpers.
"""

from __future__ import annotations
from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from typing import Self

    from rootlength.RootSystem import RootSystem

from fractions import Fraction

from typeguard import typechecked

from rootlength.utils import (
    DimensionError,
    IndexOutOfRange,
    LatticeVec,
    RatVec,
    to_integers,
)

Vector = tuple[Fraction | int, ...]


class AttributesMixin:
    """
    Mixin class providing the pairing and basic root-system attributes.

    All vectors are coordinate tuples over the simple roots; the pairing is
    ``u^T G v`` with the Gram matrix ``G``.
    """

    @typechecked
    def set_log(self: RootSystem, logs: list[dict]) -> Self:
        """
        Sets the computation log.

        Parameters
        ----------
        logs : list of dict
            A list of dictionaries representing the computation history.

        Returns
        -------
        RootSystem
            The same object.
        """
        self.log = logs
        return self

    @typechecked
    def add_log(self: RootSystem, log: dict) -> Self:
        """
        Adds a new entry to the computation log.

        Parameters
        ----------
        log : dict
            A dictionary describing the computation.

        Returns
        -------
        RootSystem
            The same object.
        """
        self.log.append(log)
        return self

    def check_vector(self: RootSystem, v) -> None:
        if len(v) != self.rank:
            raise DimensionError(
                f"Vector of length {len(v)} does not match rank {self.rank} of {self.name}"
            )

    def check_index(self: RootSystem, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise IndexOutOfRange(f"Simple root index {i} outside 1..{self.rank}")

    @typechecked
    def pairing(self: RootSystem, u: Vector, v: Vector) -> Fraction:
        """
        Exact invariant scalar product ``(u, v)``.

        Parameters
        ----------
        u, v : tuple
            Coordinate vectors over the simple roots.

        Returns
        -------
        Fraction
            ``u^T G v``.

        Raises
        ------
        DimensionError
            If a vector does not have ``rank`` coordinates.

        Examples
        --------
        >>> RootSystem("A", 2).pairing((1, 0), (0, 1))
        Fraction(-1, 1)
        """
        self.check_vector(u)
        self.check_vector(v)
        total = Fraction(0)
        for i, ui in enumerate(u):
            if ui == 0:
                continue
            row = self.gram[i]
            total += ui * sum(row[j] * vj for j, vj in enumerate(v) if vj != 0)
        return total

    @typechecked
    def squared_length(self: RootSystem, v: Vector) -> Fraction:
        """Return ``(v, v)``."""
        return self.pairing(v, v)

    @typechecked
    def coweight(self: RootSystem, i: int) -> RatVec:
        """
        Fundamental coweight ``omega_i^vee``: ``(omega_i^vee, alpha_j) = delta_ij``.

        Examples
        --------
        >>> RootSystem("G", 2).coweight(1)
        (Fraction(6, 1), Fraction(3, 1))
        """
        self.check_index(i)
        return self.coweights[i - 1]

    @typechecked
    def weight(self: RootSystem, i: int) -> RatVec:
        """Fundamental weight ``omega_i = ((alpha_i, alpha_i)/2) omega_i^vee``."""
        self.check_index(i)
        return self.weights[i - 1]

    @typechecked
    def simple_root(self: RootSystem, i: int) -> LatticeVec:
        self.check_index(i)
        return tuple(int(j == i - 1) for j in range(self.rank))

    @typechecked
    def is_root(self: RootSystem, v: LatticeVec) -> bool:
        """
        Checks whether ``v`` is a root.

        Returns
        -------
        bool
            True iff ``v`` lies in the root set; the zero vector is never a root.
        """
        self.check_vector(v)
        return v in self.roots

    @typechecked
    def is_simply_laced(self: RootSystem) -> bool:
        return len(set(self.symmetrizer)) == 1

    @typechecked
    def long_roots(self: RootSystem) -> frozenset:
        return frozenset(b for b in self.roots if self.squared_length(b) == 2)

    @typechecked
    def short_roots(self: RootSystem) -> frozenset:
        return frozenset(b for b in self.roots if self.squared_length(b) != 2)

    @typechecked
    def affine_pairing(self: RootSystem, i: int, j: int) -> Fraction:
        """
        Pairing of affine nodes ``0..rank`` with ``alpha_0 = -theta``.

        Returns
        -------
        Fraction
            ``(alpha_i, alpha_j)`` where node 0 stands for ``-theta``.
        """
        if not (0 <= i <= self.rank and 0 <= j <= self.rank):
            raise IndexOutOfRange(f"Affine node outside 0..{self.rank}")
        vi = tuple(-m for m in self.theta) if i == 0 else self.simple_root(i)
        vj = tuple(-m for m in self.theta) if j == 0 else self.simple_root(j)
        return self.pairing(vi, vj)

    @typechecked
    def from_weight_coordinates(self: RootSystem, c: tuple[int, ...]) -> LatticeVec:
        """
        Convert ``sum c_i omega_i`` to simple-root coordinates.

        Raises
        ------
        ValueError
            If the weight does not lie in the root lattice.

        Examples
        --------
        >>> RootSystem("B", 3).from_weight_coordinates((0, 0, 2))
        (1, 2, 3)
        """
        self.check_vector(c)
        total = [Fraction(0)] * self.rank
        for ci, w in zip(c, self.weights):
            for j in range(self.rank):
                total[j] += ci * w[j]
        try:
            return to_integers(total)
        except ValueError:
            raise ValueError(f"Weight {list(c)} does not lie in the root lattice of {self.name}")
