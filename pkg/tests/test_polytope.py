"""
Tests for the faces and facets of the root polytope.
"""

from fractions import Fraction

import pytest

from rootlength import FaceSpec, RootSystem, build_root_system

TYPES_UP_TO_RANK_8 = (
    [("A", n) for n in range(1, 9)]
    + [("B", n) for n in range(2, 9)]
    + [("C", n) for n in range(2, 9)]
    + [("D", n) for n in range(4, 9)]
    + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
)


def _system(name):
    return build_root_system(name[0], int(name[1:]))


class TestIndexSet:
    """The index set I of standard faces."""

    @pytest.mark.parametrize(
        "name, maximal",
        [("A3", [1, 2, 3]), ("B3", [1, 3]), ("C3", [3]), ("D4", [1, 3, 4]), ("E8", [1, 2]), ("G2", [1])],
    )
    def test_maximal_roots(self, name, maximal):
        """Maximal roots in Bourbaki numbering."""
        assert _system(name).maximal_roots() == maximal

    def test_in_I(self):
        """Membership in I through affine-diagram connectivity."""
        rs = RootSystem("B", 3)
        assert not rs.in_I({2})
        assert rs.in_I({1, 3})
        assert rs.in_I(set())

    def test_closure_data(self):
        """Closure data of F(3) in B3."""
        rs = RootSystem("B", 3)
        data = rs.closure_data({3})
        assert data.beta == (0, 1, 2)
        assert data.closure == frozenset({3})
        assert data.boundary == frozenset({3})

    def test_canonical_face(self):
        """A word in W_{A*} does not move the face."""
        rs = RootSystem("A", 2)
        assert rs.face({1}, (2,)) == FaceSpec(frozenset({1}), ())

    def test_faces_summary(self):
        """Orbit sizes of the standard faces of A2."""
        assert [r["orbit_size"] for r in RootSystem("A", 2).faces_summary()] == [1, 3, 3, 6]


class TestFacets:
    """Facet enumeration and the half-space presentation."""

    @pytest.mark.parametrize("name, count", [("A2", 6), ("A3", 14), ("B3", 14), ("C3", 8), ("G2", 6)])
    def test_facet_counts(self, name, count):
        """Known facet counts."""
        assert len(_system(name).enumerate_facets()) == count

    @pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4", "F4", "G2"])
    def test_halfspace(self, name):
        """Facet functionals bound every root by 1 and each is tight somewhere."""
        rs = _system(name)
        functionals = rs.halfspace_presentation()
        assert rs.check_halfspace_certificate(functionals)
        for facet in rs.enumerate_facets():
            assert max(facet.value(b) for b in rs.roots) == 1
            assert rs.tight_roots(facet)

    def test_certificate_rejects(self):
        """Empty or non-tight functionals are no certificate."""
        rs = RootSystem("A", 2)
        assert not rs.check_halfspace_certificate([])
        half = tuple(Fraction(x, 2) for x in rs.coweight(1))
        assert not rs.check_halfspace_certificate([half])

    def test_tight_roots(self):
        """Tight roots of the two coordinate facets of B3."""
        rs = RootSystem("B", 3)
        facet = rs.facet_of(3)
        assert rs.tight_roots(facet) == frozenset({(0, 1, 2), (1, 1, 2), (1, 2, 2)})
        assert rs.tight_roots(rs.facet_of(1)) == rs.face_roots(FaceSpec(frozenset({1})))
        assert len(rs.tight_roots(rs.facet_of(1))) == 5

    def test_g2_facets_are_edges(self):
        """Each G2 facet is an edge between two long roots."""
        rs = RootSystem("G", 2)
        for facet in rs.enumerate_facets():
            tight = rs.tight_roots(facet)
            assert len(tight) == 2
            assert all(rs.squared_length(b) == 2 for b in tight)

    def test_facet_of_non_maximal(self):
        """Only maximal roots index facets."""
        with pytest.raises(ValueError):
            RootSystem("B", 3).facet_of(2)

    def test_export_round_trip(self):
        """Exported facets parse back to the same functionals."""
        rs = RootSystem("C", 3)
        records = rs.facets_to_json()
        assert len(records) == 8
        parsed = rs.facets_from_json(records)
        assert [f.lam for f in parsed] == [f.lam for f in rs.enumerate_facets()]

    def test_export_rejects_wrong_functional(self):
        """A tampered functional is rejected on import."""
        rs = RootSystem("C", 3)
        records = rs.facets_to_json()
        records[0] = {**records[0], "lambda": ["0", "0", "1"]}
        with pytest.raises(ValueError):
            rs.facets_from_json(records)


class TestFaces:
    """Faces, containment and adjacency."""

    def test_face_counts(self):
        """Face counts of the hexagon."""
        counts = RootSystem("A", 2).count_faces()
        assert counts == {(): 1, (1,): 3, (2,): 3, (1, 2): 6}

    def test_barycenter(self):
        """Barycenter of an edge of the hexagon, and rejection outside I."""
        rs = RootSystem("A", 2)
        assert rs.barycenter({1}) == (Fraction(1), Fraction(1, 2))
        with pytest.raises(ValueError):
            RootSystem("B", 3).barycenter({2})

    def test_codimension(self):
        """Codimension of a facet and of an edge of B3."""
        rs = RootSystem("B", 3)
        assert rs.codimension(FaceSpec(frozenset({3}))) == 1
        assert rs.codimension(FaceSpec(frozenset({1, 3}))) == 2

    @pytest.mark.parametrize("name", ["A2", "A3", "A4", "B3", "B4", "C3", "D4", "F4", "G2"])
    def test_codimension_is_size_of_A(self, name):
        """codim F(A) = |A| for every nonempty A in I."""
        rs = _system(name)
        for A in rs.index_set():
            if A:
                assert rs.codimension(FaceSpec(A)) == len(A)

    def test_face_contains(self):
        """A vertex lies on an edge of the hexagon, not the other way round."""
        rs = RootSystem("A", 2)
        assert rs.face_contains(FaceSpec(frozenset({2})), FaceSpec(frozenset({1, 2})))
        assert not rs.face_contains(FaceSpec(frozenset({1, 2})), FaceSpec(frozenset({2})))

    def test_translated_edge_not_contained(self):
        """F({1}; s1) is a different edge of the hexagon than F({1})."""
        rs = RootSystem("A", 2)
        moved = rs.face({1}, (1,))
        assert moved.tau == (1,)
        assert not rs.face_contains(rs.face({1}), moved)
        assert not rs.face_contains(moved, rs.face({1}))

    @pytest.mark.parametrize("name", ["A2", "A3", "B2", "B3", "C2", "C3", "G2"])
    def test_face_contains_matches_roots(self, name):
        """Containment agrees with inclusion of the sets of roots."""
        rs = _system(name)
        faces = rs.faces()
        for outer in faces:
            for inner in faces:
                by_roots = rs.face_roots(inner) <= rs.face_roots(outer)
                assert rs.face_contains(outer, inner) == by_roots

    @pytest.mark.slow
    @pytest.mark.parametrize("name", ["A4", "B4", "C4", "D4"])
    def test_face_contains_matches_roots_rank_4(self, name):
        """Containment agrees with inclusion of root sets in rank 4."""
        rs = _system(name)
        faces = rs.faces()
        for outer in faces:
            for inner in faces:
                by_roots = rs.face_roots(inner) <= rs.face_roots(outer)
                assert rs.face_contains(outer, inner) == by_roots

    @pytest.mark.parametrize("name", ["A3", "B3", "C3", "G2"])
    def test_adjacency(self, name):
        """Listed adjacent facets are exactly the geometric ones."""
        rs = _system(name)
        for alpha in rs.maximal_roots():
            listed = {a.facet.lam for a in rs.adjacent_facets(alpha)}
            geometric = {f.lam for f in rs.geometric_adjacent(rs.facet_of(alpha))}
            assert listed == geometric

    def test_adjacency_a2(self):
        """Each edge of the hexagon meets two edges of the other orbit."""
        assert [a.facet.alpha for a in RootSystem("A", 2).adjacent_facets(1)] == [2, 2]

    def test_g2_autointersection(self):
        """G2 facets only meet facets of their own orbit."""
        rs = RootSystem("G", 2)
        adjacent = rs.adjacent_facets(1)
        assert len(adjacent) == 2
        assert all(a.autointersection and a.via == 2 for a in adjacent)

    def test_c2_autointersection(self):
        """The four facets of C2 form a square, adjacent across alpha_1."""
        rs = RootSystem("C", 2)
        assert rs.maximal_roots() == [2]
        assert len(rs.enumerate_facets()) == 4
        adjacent = rs.adjacent_facets(2)
        assert len(adjacent) == 2
        assert all(a.autointersection and a.via == 1 for a in adjacent)
        geometric = {f.lam for f in rs.geometric_adjacent(rs.facet_of(2))}
        assert {a.facet.lam for a in adjacent} == geometric


class TestSeparators:
    """Separating-hyperplane data of the coordinate facets."""

    @pytest.mark.parametrize("name, alpha, psi", [("B3", 3, (1,)), ("B4", 4, (1, 3)), ("G2", 1, (2,))])
    def test_psi(self, name, alpha, psi):
        """Separator index sets."""
        assert _system(name).psi_and_nabla(alpha).psi == psi

    def test_g2_separators(self):
        """G2 separates only from its own orbit, with D_l = 1/2."""
        sep = RootSystem("G", 2).psi_and_nabla(1)
        assert sep.autointersection == 2
        assert sep.d_long[2] == Fraction(1, 2)

    def test_orbit_split(self):
        """F(3) of B3 has only long roots."""
        long_part, short_part = RootSystem("B", 3).orbit_split(3)
        assert long_part == frozenset({(0, 1, 2), (1, 1, 2), (1, 2, 2)})
        assert short_part == frozenset()

    def test_orbit_split_with_short_roots(self):
        """F(3) of C3 contains the orbit of the highest short root."""
        rs = RootSystem("C", 3)
        long_part, short_part = rs.orbit_split(3)
        assert short_part
        assert rs.theta_s in short_part
        assert all(rs.squared_length(b) != 2 for b in short_part)

    @pytest.mark.parametrize("family, rank", TYPES_UP_TO_RANK_8)
    def test_orbit_split_matches_face_roots(self, family, rank):
        """Long and short parabolic orbits partition the roots of each coordinate facet."""
        rs = build_root_system(family, rank)
        for alpha in rs.maximal_roots():
            roots = rs.face_roots(FaceSpec(frozenset({alpha})))
            long_part, short_part = rs.orbit_split(alpha)
            assert long_part == frozenset(b for b in roots if rs.squared_length(b) == 2)
            assert short_part == frozenset(b for b in roots if rs.squared_length(b) != 2)


if __name__ == "__main__":
    pytest.main([__file__])
