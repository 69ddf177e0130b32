"""
Construction of root-system data from the Dynkin fixture.

This module reads the versioned fixture ``data/dynkin.json``, expands the
per-family templates into a Cartan matrix, symmetrizes it into the Gram matrix
(long roots of squared length 2), closes the simple roots under the simple
reflections and derives the highest roots, marks, (co)weights and the affine
Dynkin diagram.
"""

from __future__ import annotations
from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from rootlength.RootSystem import RootSystem

import json
from collections import deque
from fractions import Fraction
from functools import lru_cache
from importlib.resources import files

import networkx as nx
import numpy as np
import sympy
from typeguard import typechecked

from rootlength.utils import (
    InvariantViolation,
    RootSystemError,
    SUPPORTED_FAMILIES,
    log_pipeline,
)


@lru_cache(maxsize=1)
def load_fixture() -> dict:
    """Return the parsed Dynkin fixture shipped with the package."""
    path = files("rootlength").joinpath("data", "dynkin.json")
    data = json.loads(path.read_text(encoding="utf-8"))
    if data.get("format") != "rootlength-dynkin":
        raise RootSystemError("Malformed Dynkin fixture")
    return data


def _node(expr: str, rank: int) -> int:
    expr = expr.replace(" ", "")
    if expr == "l":
        return rank
    if expr.startswith("l-"):
        return rank - int(expr[2:])
    return int(expr)


@typechecked
def expected_root_count(family: str, rank: int) -> int:
    """Closed-form number of roots of the irreducible system ``family``+``rank``."""
    if family == "A":
        return rank * (rank + 1)
    if family in ("B", "C"):
        return 2 * rank * rank
    if family == "D":
        return 2 * rank * (rank - 1)
    return {("E", 6): 72, ("E", 7): 126, ("E", 8): 240, ("F", 4): 48, ("G", 2): 12}[
        (family, rank)
    ]


class IOMixin:
    """
    Mixin class building every piece of root-system data.

    The fixture only describes Dynkin diagrams; everything else (roots,
    highest roots, coweights, affine diagram) is computed exactly here and
    checked against closed-form counts and the fixture's affine attachments.
    """

    @staticmethod
    @typechecked
    def check_type(family: str, rank: int) -> tuple[str, int]:
        """
        Validate an irreducible type.

        Parameters
        ----------
        family : str
            One of ``A B C D E F G`` (case-insensitive).
        rank : int
            The rank.

        Returns
        -------
        tuple of (str, int)
            The normalized family letter and rank.

        Raises
        ------
        RootSystemError
            If the pair is not an irreducible crystallographic type.
        """
        family = family.strip().upper()
        if family not in SUPPORTED_FAMILIES:
            raise RootSystemError(f"Unknown family: {family!r}")
        lo, hi = load_fixture()["families"][family]["ranks"]
        if rank < lo or (hi is not None and rank > hi):
            raise RootSystemError(f"Invalid rank {rank} for family {family}")
        return family, rank

    def _build_cartan(self: RootSystem) -> np.ndarray:
        spec = load_fixture()["families"][self.family]
        n = self.rank
        cartan = np.zeros((n, n), dtype=object)
        for i in range(n):
            cartan[i, i] = 2
        start, end = (_node(x, n) for x in spec["chain"])
        edges = [(i, i + 1) for i in range(start, end)]
        edges += [tuple(_node(x, n) for x in e) for e in spec["edges"]]
        for i, j in edges:
            cartan[i - 1, j - 1] = -1
            cartan[j - 1, i - 1] = -1
        for i, j, value in spec["heavy"]:
            cartan[_node(i, n) - 1, _node(j, n) - 1] = int(value)
        return cartan

    def _build_symmetrizer(self: RootSystem) -> tuple[Fraction, ...]:
        # d_i C_ij = d_j C_ji along the (tree) Dynkin diagram
        n = self.rank
        d: list[Fraction | None] = [None] * n
        d[0] = Fraction(1)
        queue = deque([0])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if j != i and self.cartan[i, j] != 0 and d[j] is None:
                    d[j] = d[i] * Fraction(int(self.cartan[i, j]), int(self.cartan[j, i]))
                    queue.append(j)
        if any(x is None for x in d):
            raise RootSystemError(f"Dynkin diagram of {self.name} is not connected")
        top = max(d)
        return tuple(x / top for x in d)

    def _close_roots(self: RootSystem) -> frozenset:
        simple = [tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)]
        seen = set(simple)
        queue = deque(simple)
        while queue:
            beta = queue.popleft()
            for i in range(self.rank):
                image = self._reflect(i, beta)
                if image not in seen:
                    seen.add(image)
                    queue.append(image)
        return frozenset(seen)

    def _dominant_root(self: RootSystem, squared: Fraction) -> tuple[int, ...]:
        found = [
            beta
            for beta in self.positive_roots
            if self.squared_length(beta) == squared
            and all(c >= 0 for c in self._coroot_pairings(beta))
        ]
        if len(found) != 1:
            raise InvariantViolation(
                f"{self.name}: expected a unique dominant root of squared length "
                f"{squared}, found {len(found)}"
            )
        return found[0]

    def _build_affine_diagram(self: RootSystem) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.rank + 1))
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                if self.cartan[i, j] != 0:
                    graph.add_edge(i + 1, j + 1)
        # (alpha_0, alpha_i) = -(theta, alpha_i)
        theta_pairings = self._coroot_pairings(self.theta)
        for i in range(self.rank):
            if theta_pairings[i] != 0:
                graph.add_edge(0, i + 1)
        spec = load_fixture()["families"][self.family]["affine_attach"]
        listed = spec.get(str(self.rank), spec.get("*"))
        expected = {_node(x, self.rank) for x in listed}
        if set(graph.neighbors(0)) != expected:
            raise InvariantViolation(
                f"{self.name}: affine node attaches to {sorted(graph.neighbors(0))}, "
                f"fixture lists {sorted(expected)}"
            )
        return graph

    def build(self: RootSystem) -> None:
        """
        Compute all root-system data for ``self.family`` and ``self.rank``.

        Raises
        ------
        InvariantViolation
            If a computed quantity disagrees with its closed form.
        """
        n = self.rank
        self.cartan = self._build_cartan()
        self._cartan_rows = tuple(tuple(int(x) for x in row) for row in self.cartan)
        self._cartan_cols = tuple(zip(*self._cartan_rows))
        self.symmetrizer = self._build_symmetrizer()
        self.gram = np.array(
            [[self.symmetrizer[i] * int(self.cartan[i, j]) for j in range(n)] for i in range(n)],
            dtype=object,
        )
        if any((self.gram[i, j] != self.gram[j, i]) for i in range(n) for j in range(n)):
            raise InvariantViolation(f"{self.name}: Gram matrix is not symmetric")
        gram_sym = sympy.Matrix(
            n, n, lambda i, j: sympy.Rational(self.gram[i, j].numerator, self.gram[i, j].denominator)
        )
        for k in range(1, n + 1):
            if gram_sym[:k, :k].det() <= 0:
                raise InvariantViolation(f"{self.name}: Gram matrix is not positive definite")
        inverse = gram_sym.inv()
        self.coweights = tuple(
            tuple(Fraction(int(inverse[i, j].p), int(inverse[i, j].q)) for j in range(n))
            for i in range(n)
        )
        self.weights = tuple(
            tuple(self.symmetrizer[i] * x for x in self.coweights[i]) for i in range(n)
        )

        self.roots = self._close_roots()
        if len(self.roots) != expected_root_count(self.family, n):
            raise InvariantViolation(
                f"{self.name}: {len(self.roots)} roots, expected "
                f"{expected_root_count(self.family, n)}"
            )
        positive = set()
        for beta in self.roots:
            if all(c >= 0 for c in beta):
                positive.add(beta)
            elif not all(c <= 0 for c in beta):
                raise InvariantViolation(f"{self.name}: root {beta} has mixed signs")
        self.positive_roots = frozenset(positive)
        self.sorted_roots = tuple(sorted(self.roots))
        self.sorted_positive_roots = tuple(sorted(self.positive_roots))

        self.theta = self._dominant_root(Fraction(2))
        self.theta_s = None if self.is_simply_laced() else self._dominant_root(min(self.symmetrizer) * 2)
        self.marks = self.theta
        for i in range(n):
            if self.pairing(self.coweights[i], self.theta) != self.marks[i]:
                raise InvariantViolation(f"{self.name}: (coweight_{i + 1}, theta) != m_{i + 1}")
        self.affine_diagram = self._build_affine_diagram()
        log_pipeline(f"built {self.name}: {len(self.roots)} roots, marks {self.marks}")
