"""
Brute-force ground truth for the length and the positive length.

Nothing here uses facets, coweights or dominant conjugates: the length is found
by meet-in-the-middle over sums of roots and the positive length by a
breadth-first search, so both can be compared against the facet formula.
"""

from collections import deque

from typeguard import typechecked

from rootlength.RootSystem import RootSystem
from rootlength.utils import (
    DEFAULT_R_MAX,
    DEFAULT_STATE_CAP,
    LatticeVec,
    LengthExceeded,
    StateCapExceeded,
    add_vec,
    sub_vec,
)


class RootSumTable:
    """
    Sums of exactly ``k`` roots, grown on demand.

    ``layer(k)`` maps every sum of ``k`` roots to a parent ``(sum, root)`` in
    ``layer(k - 1)``, so a witness can be read back. Layers are never modified
    once built; one table is kept per root system. The number of stored sums
    over all layers is bounded by ``cap`` (``DEFAULT_STATE_CAP``).
    """

    def __init__(self, rs: RootSystem, cap: int | None = None):
        self.rs = rs
        self.cap = DEFAULT_STATE_CAP if cap is None else cap
        self._layers = [{tuple([0] * rs.rank): None}]
        self._stored = 1

    @classmethod
    def of(cls, rs: RootSystem) -> "RootSumTable":
        return rs._cached("root_sum_table", lambda: cls(rs))

    def layer(self, k: int) -> dict:
        """
        Sums of exactly ``k`` roots.

        Raises
        ------
        StateCapExceeded
            If growing the table would store more than ``cap`` sums.
        """
        roots = self.rs.sorted_roots
        while len(self._layers) <= k:
            previous = self._layers[-1]
            current = {}
            for x in previous:
                for beta in roots:
                    y = add_vec(x, beta)
                    if y not in current:
                        current[y] = (x, beta)
                        if self._stored + len(current) > self.cap:
                            raise StateCapExceeded(
                                f"{self.rs.name} sums of {len(self._layers)} roots", self.cap
                            )
            self._layers.append(current)
            self._stored += len(current)
        return self._layers[k]

    def witness(self, k: int, gamma) -> tuple[LatticeVec, ...]:
        """The ``k`` roots recorded for ``gamma`` in ``layer(k)``."""
        out = []
        for j in range(k, 0, -1):
            gamma, beta = self._layers[j][gamma]
            out.append(beta)
        return tuple(out)

    def split(self, gamma, r: int) -> tuple | None:
        """A pair ``(x, y)`` with ``x`` in ``layer(r // 2)``, ``x + y = gamma``, ``y`` in ``layer(r - r // 2)``."""
        small = self.layer(r // 2)
        large = self.layer(r - r // 2)
        for x in small:
            y = sub_vec(gamma, x)
            if y in large:
                return x, y
        return None


@typechecked
def brute_length_witness(
    rs: RootSystem, gamma: LatticeVec, r_max: int = DEFAULT_R_MAX
) -> tuple[LatticeVec, ...]:
    """
    A shortest tuple of roots summing to ``gamma``.

    For ``r = 0, 1, ...`` the sums of ``floor(r/2)`` roots are scanned for a
    complement among the sums of ``ceil(r/2)`` roots.

    Raises
    ------
    ValueError
        If ``r_max`` is negative.
    LengthExceeded
        If ``gamma`` needs more than ``r_max`` roots.
    StateCapExceeded
        If the sums of roots outgrow the table cap.

    Examples
    --------
    >>> len(brute_length_witness(RootSystem("B", 3), (1, 0, 2)))
    2
    """
    rs.check_vector(gamma)
    if r_max < 0:
        raise ValueError(f"r_max must be nonnegative, got {r_max}")
    table = RootSumTable.of(rs)
    for r in range(r_max + 1):
        found = table.split(tuple(gamma), r)
        if found is not None:
            x, y = found
            return table.witness(r // 2, x) + table.witness(r - r // 2, y)
    raise LengthExceeded(tuple(gamma), r_max)


@typechecked
def brute_length(rs: RootSystem, gamma: LatticeVec, r_max: int = DEFAULT_R_MAX) -> int:
    """
    Least number of roots summing to ``gamma``, by meet-in-the-middle.

    Raises
    ------
    LengthExceeded
        If ``gamma`` needs more than ``r_max`` roots.

    Examples
    --------
    >>> brute_length(RootSystem("G", 2), (4, 2))
    2
    """
    return len(brute_length_witness(rs, gamma, r_max))


@typechecked
def brute_positive_length(rs: RootSystem, gamma: LatticeVec, cap: int | None = None) -> int:
    """
    Least number of positive roots summing to ``gamma``.

    Breadth-first search from ``gamma`` down to 0, each step subtracting a
    positive root and staying coordinatewise nonnegative.

    Raises
    ------
    ValueError
        If ``gamma`` has a negative coordinate.
    StateCapExceeded
        If more than ``cap`` states are visited.

    Examples
    --------
    >>> brute_positive_length(RootSystem("B", 3), (1, 0, 2))
    3
    """
    rs.check_vector(gamma)
    if any(g < 0 for g in gamma):
        raise ValueError(f"{list(gamma)} is not in the positive root cone")
    cap = DEFAULT_STATE_CAP if cap is None else cap
    start = tuple(gamma)
    zero = tuple([0] * rs.rank)
    distance = {start: 0}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        if u == zero:
            return distance[u]
        for beta in rs.sorted_positive_roots:
            v = sub_vec(u, beta)
            if v in distance or any(x < 0 for x in v):
                continue
            distance[v] = distance[u] + 1
            if len(distance) > cap:
                raise StateCapExceeded(f"positive-length search of {list(gamma)}", cap)
            queue.append(v)
    raise ValueError(f"{list(gamma)} is not a sum of positive roots")
