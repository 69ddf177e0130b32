"""
Tests for the RootSystem class.

Root data, the invariant pairing, (co)weights and the type parser.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rootlength import RootSystem, build_root_system, parse_type
from rootlength.system._io import expected_root_count
from rootlength.utils import DimensionError, IndexOutOfRange, RootSystemError

ALL_TYPES = [
    ("A", 1), ("A", 2), ("A", 5), ("B", 2), ("B", 3), ("C", 3), ("D", 4),
    ("D", 5), ("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2),
]


class TestRootSystem:
    """Construction and basic data."""

    def test_init(self):
        """Basic data of B3 and the construction log."""
        rs = RootSystem("B", 3)
        assert rs.name == "B3"
        assert len(rs.roots) == 18
        assert rs.theta == (1, 2, 2)
        assert rs.log[0]["action"] == "initialize"

    def test_version_accessible(self):
        """Test that version is accessible."""
        from rootlength import __version__
        assert isinstance(__version__, str)
        assert len(__version__) > 0

    @pytest.mark.parametrize("family, rank", ALL_TYPES)
    def test_root_counts(self, family, rank):
        """Root counts match the closed forms."""
        rs = build_root_system(family, rank)
        assert len(rs.roots) == expected_root_count(family, rank)
        assert len(rs.positive_roots) * 2 == len(rs.roots)

    @pytest.mark.parametrize(
        "family, rank, marks",
        [
            ("A", 4, (1, 1, 1, 1)),
            ("B", 3, (1, 2, 2)),
            ("C", 3, (2, 2, 1)),
            ("D", 4, (1, 2, 1, 1)),
            ("E", 8, (2, 3, 4, 6, 5, 4, 3, 2)),
            ("F", 4, (2, 3, 4, 2)),
            ("G", 2, (3, 2)),
        ],
    )
    def test_marks(self, family, rank, marks):
        """Marks of the highest root."""
        assert build_root_system(family, rank).marks == marks

    def test_shared_instance(self):
        """The builder shares one instance per type."""
        assert build_root_system("G", 2) is build_root_system("g", 2)
        assert build_root_system("G", 2) == RootSystem("G", 2)

    @pytest.mark.parametrize("family, rank", [("H", 3), ("E", 9), ("G", 3), ("D", 2)])
    def test_invalid_type(self, family, rank):
        """Unknown types are rejected."""
        with pytest.raises(RootSystemError):
            RootSystem(family, rank)

    def test_long_and_short(self):
        """Long and short roots and lacing."""
        rs = RootSystem("B", 3)
        assert len(rs.long_roots()) == 12
        assert len(rs.short_roots()) == 6
        assert not rs.is_simply_laced()
        assert RootSystem("E", 6).is_simply_laced()

    def test_to_dict(self):
        """Dictionary summary of G2."""
        data = RootSystem("G", 2).to_dict()
        assert data["type"] == "G2"
        assert data["marks"] == [3, 2]
        assert data["roots"] == 12
        assert data["maximal_roots"] == [1]


class TestPairing:
    """The invariant scalar product and the fundamental (co)weights."""

    def test_pairing(self):
        """Pairing of simple roots and the length of theta."""
        rs = RootSystem("A", 2)
        assert rs.pairing((1, 0), (0, 1)) == Fraction(-1)
        assert rs.squared_length(rs.theta) == 2

    @pytest.mark.parametrize("family, rank", ALL_TYPES)
    def test_coweights_are_dual(self, family, rank):
        """Fundamental coweights are dual to the simple roots."""
        rs = build_root_system(family, rank)
        for i in range(1, rank + 1):
            for j in range(1, rank + 1):
                assert rs.pairing(rs.coweight(i), rs.simple_root(j)) == int(i == j)

    @pytest.mark.parametrize("family, rank", ALL_TYPES)
    def test_theta_is_long(self, family, rank):
        """The highest root is long with coefficients equal to the marks."""
        rs = build_root_system(family, rank)
        assert rs.squared_length(rs.theta) == 2
        assert rs.is_root(rs.theta)
        assert all(rs.theta[i] == rs.marks[i] for i in range(rank))

    def test_g2_coweight(self):
        """The first G2 coweight in root coordinates."""
        assert RootSystem("G", 2).coweight(1) == (Fraction(6), Fraction(3))

    def test_dimension_mismatch(self):
        """Wrong ranks and indices raise."""
        rs = RootSystem("B", 3)
        with pytest.raises(DimensionError):
            rs.pairing((1, 0), (0, 1, 0))
        with pytest.raises(IndexOutOfRange):
            rs.coweight(4)

    def test_weight_coordinates(self):
        """Weight coordinates convert back to the root lattice."""
        rs = RootSystem("B", 3)
        assert rs.from_weight_coordinates((0, 0, 2)) == (1, 2, 3)
        with pytest.raises(ValueError):
            rs.from_weight_coordinates((0, 0, 1))

    @given(st.tuples(*[st.integers(-4, 4)] * 4))
    @settings(max_examples=50, deadline=None)
    def test_root_lattice_weights_round_trip(self, gamma):
        """Coroot pairings convert back to the same vector."""
        rs = build_root_system("F", 4)
        c = rs._coroot_pairings(gamma)
        assert rs.from_weight_coordinates(tuple(c)) == gamma


class TestParseType:
    """Type strings, including products of irreducible types."""

    def test_parse(self):
        """Type strings and products."""
        assert parse_type("A2xB3") == [("A", 2), ("B", 3)]
        assert parse_type("g", 2) == [("G", 2)]
        assert parse_type("E8") == [("E", 8)]

    @pytest.mark.parametrize("text, rank", [("B", None), ("A2xB3", 4), ("Q3", None), ("B1x", None)])
    def test_parse_errors(self, text, rank):
        """Malformed type strings raise."""
        with pytest.raises(RootSystemError):
            parse_type(text, rank)


if __name__ == "__main__":
    pytest.main([__file__])
