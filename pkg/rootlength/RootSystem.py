from functools import lru_cache

from typeguard import typechecked

from rootlength.system._attributes import AttributesMixin
from rootlength.system._export import ExportMixin
from rootlength.system._io import IOMixin
from rootlength.system._length import LengthMixin
from rootlength.system._polytope import PolytopeMixin
from rootlength.system._weyl import WeylMixin


class RootSystem(
    IOMixin,
    AttributesMixin,
    WeylMixin,
    PolytopeMixin,
    LengthMixin,
    ExportMixin,
):
    """
    An irreducible crystallographic root system with exact data.

    Vectors are written in the basis of simple roots (Bourbaki numbering):
    lattice elements as tuples of ints, coweights and functionals as tuples of
    Fractions. The mathematical data is computed once in the constructor and
    never changes afterwards; heavy derived objects (facets, coset
    representatives, face data) are computed on demand and cached.

    Attributes
    ----------
    family : str
        One of ``A B C D E F G``.
    rank : int
        The rank l.
    cartan : numpy.ndarray
        l x l integer matrix, ``cartan[i, j] = <alpha_i^vee, alpha_j>``.
    gram : numpy.ndarray
        l x l matrix of Fractions ``(alpha_i, alpha_j)``, long roots of squared
        length 2.
    roots, positive_roots : frozenset of tuple of int
        All roots and the positive ones.
    theta, theta_s : tuple of int
        Highest root and highest short root (``None`` if simply laced).
    marks : tuple of int
        Coordinates of ``theta``.
    coweights, weights : tuple of tuple of Fraction
        Fundamental coweights and weights.
    affine_diagram : networkx.Graph
        Affine Dynkin diagram on nodes ``0..l``.
    log : list of dict
        A log of the computations performed on this system.
    """

    ################################################################################
    # init
    ################################################################################
    @typechecked
    def __init__(self, family: str, rank: int):
        """Builds the root system of type ``family`` and rank ``rank``.

        Examples
        --------
        >>> rs = RootSystem("B", 3)
        >>> len(rs.roots)
        18
        >>> rs.theta
        (1, 2, 2)
        """
        self.family, self.rank = self.check_type(family, rank)
        self.log = [{"action": "initialize", "params": {"family": self.family, "rank": self.rank}}]
        self._cache = {}
        self.build()
        self.add_log({"action": "build_root_system", "params": {"roots": len(self.roots)}})

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def __str__(self):
        info = [
            f"type={self.name}",
            f"roots={len(self.roots)}",
            f"theta={list(self.theta)}",
            f"maximal={self.maximal_roots()}",
        ]
        return f"RootSystem({', '.join(info)})"

    def __repr__(self):
        return self.__str__()

    def __eq__(self, other):
        return isinstance(other, RootSystem) and (self.family, self.rank) == (other.family, other.rank)

    def __hash__(self):
        return hash((self.family, self.rank))

    def _cached(self, key, compute):
        if key not in self._cache:
            self._cache[key] = compute()
        return self._cache[key]


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    """
    Shared instance of the root system of type ``family`` and rank ``rank``.

    Instances are immutable apart from their caches, so one object per type
    is kept for the lifetime of the process.

    Examples
    --------
    >>> build_root_system("G", 2).marks
    (3, 2)
    """
    family, rank = RootSystem.check_type(family, rank)
    return RootSystem(family, rank)
