"""
Products of irreducible root systems.

The root lattice of a product is the direct sum of the component lattices and
every root lies in one component, so the length and the positive length are
sums over the components.
"""

import re

from typeguard import typechecked

from rootlength.RootSystem import RootSystem, build_root_system
from rootlength.utils import LatticeVec, RootSystemError

_COMPONENT = re.compile(r"^([A-Ga-g])(\d+)$")


@typechecked
def parse_type(text: str, rank: int | None = None) -> list[tuple[str, int]]:
    """
    Parse ``"B3"``, ``"B"`` with ``rank``, or a product such as ``"A2xB3"``.

    Raises
    ------
    RootSystemError
        If a component is malformed, not a valid type, or a bare family is
        given without a rank.

    Examples
    --------
    >>> parse_type("A2xB3")
    [('A', 2), ('B', 3)]
    >>> parse_type("g", 2)
    [('G', 2)]
    """
    text = text.strip()
    if len(text) == 1:
        if rank is None:
            raise RootSystemError(f"Type {text!r} needs a rank")
        text = f"{text}{rank}"
    out = []
    for part in re.split(r"[xX×]", text):
        match = _COMPONENT.match(part.strip())
        if match is None:
            raise RootSystemError(f"Malformed type component {part!r} in {text!r}")
        out.append(RootSystem.check_type(match.group(1), int(match.group(2))))
    if rank is not None and sum(r for _, r in out) != rank:
        raise RootSystemError(f"Type {text!r} does not have rank {rank}")
    return out


class ReducibleSystem:
    """
    A product of irreducible root systems with coordinates concatenated in the
    order of the components.
    """

    @typechecked
    def __init__(self, components: list[tuple[str, int]]):
        if not components:
            raise RootSystemError("A product needs at least one component")
        self.components = [build_root_system(f, r) for f, r in components]
        self.rank = sum(rs.rank for rs in self.components)

    @classmethod
    def from_text(cls, text: str, rank: int | None = None) -> "ReducibleSystem":
        return cls(parse_type(text, rank))

    @property
    def name(self) -> str:
        return "x".join(rs.name for rs in self.components)

    @property
    def is_irreducible(self) -> bool:
        return len(self.components) == 1

    def __str__(self):
        return f"ReducibleSystem(type={self.name}, rank={self.rank})"

    @typechecked
    def split(self, gamma: tuple) -> list[tuple]:
        """
        Cut a vector into component vectors.

        Examples
        --------
        >>> ReducibleSystem([("A", 1), ("G", 2)]).split((1, 2, 3))
        [(1,), (2, 3)]
        """
        if len(gamma) != self.rank:
            raise ValueError(f"Vector of length {len(gamma)} does not match rank {self.rank} of {self.name}")
        out, start = [], 0
        for rs in self.components:
            out.append(tuple(gamma[start : start + rs.rank]))
            start += rs.rank
        return out

    def _embed(self, k: int, v) -> LatticeVec:
        before = sum(rs.rank for rs in self.components[:k])
        after = self.rank - before - self.components[k].rank
        return (0,) * before + tuple(v) + (0,) * after

    @typechecked
    def length(self, gamma: LatticeVec) -> int:
        """Sum of the component lengths."""
        return sum(rs.length(g).length for rs, g in zip(self.components, self.split(gamma)))

    @typechecked
    def decompose(self, gamma: LatticeVec) -> tuple[LatticeVec, ...]:
        out = []
        for k, (rs, g) in enumerate(zip(self.components, self.split(gamma))):
            out.extend(self._embed(k, beta) for beta in rs.decompose(g))
        return tuple(out)

    @typechecked
    def positive_length(self, gamma: LatticeVec, cap: int | None = None) -> int:
        return sum(
            rs.positive_length(g, cap) for rs, g in zip(self.components, self.split(gamma))
        )

    @typechecked
    def from_weight_coordinates(self, c: tuple[int, ...]) -> LatticeVec:
        out = []
        for rs, part in zip(self.components, self.split(c)):
            out.extend(rs.from_weight_coordinates(part))
        return tuple(out)
