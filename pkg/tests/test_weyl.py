"""
Tests for the Weyl group actions: reflections, dominant forms, orbits and
minimal coset representatives.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rootlength import RootSystem, build_root_system
from rootlength.utils import NotDominantError, OrbitCapExceeded

B3 = build_root_system("B", 3)
G2 = build_root_system("G", 2)
lattice_b3 = st.tuples(*[st.integers(-5, 5)] * 3)
words_b3 = st.lists(st.integers(1, 3), max_size=10).map(tuple)

TYPES_UP_TO_RANK_8 = (
    [("A", n) for n in range(1, 9)]
    + [("B", n) for n in range(2, 9)]
    + [("C", n) for n in range(2, 9)]
    + [("D", n) for n in range(4, 9)]
    + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
)


class TestReflections:
    """Simple reflections and words."""

    def test_reflect_simple(self):
        """A simple reflection subtracts the coroot pairing from one coordinate."""
        rs = RootSystem("A", 2)
        assert rs.reflect_simple(1, (0, 1)) == (1, 1)
        assert rs.reflect_simple(1, (1, 0)) == (-1, 0)

    def test_act_word(self):
        """The rightmost letter of a word acts first."""
        assert RootSystem("A", 2).act_word((1, 2), (0, 1)) == (-1, -1)

    @given(lattice_b3, st.integers(1, 3))
    @settings(max_examples=100, deadline=None)
    def test_reflection_is_involution(self, v, i):
        """Reflecting twice is the identity."""
        assert B3.reflect_simple(i, B3.reflect_simple(i, v)) == v

    @given(lattice_b3, lattice_b3, st.integers(1, 3))
    @settings(max_examples=100, deadline=None)
    def test_reflection_preserves_pairing(self, u, v, i):
        """Reflections are isometries of the invariant pairing."""
        assert B3.pairing(B3.reflect_simple(i, u), B3.reflect_simple(i, v)) == B3.pairing(u, v)

    def test_roots_are_permuted(self):
        """Every simple reflection permutes the roots."""
        for i in range(1, 4):
            assert {B3.reflect_simple(i, b) for b in B3.roots} == set(B3.roots)


class TestDominant:
    """Dominant conjugates with their words."""

    def test_to_dominant(self):
        """Known dominant conjugate and word in A2."""
        assert RootSystem("A", 2).to_dominant((-1, 0)) == ((1, 1), (2, 1))

    @given(lattice_b3)
    @settings(max_examples=100, deadline=None)
    def test_to_dominant_word(self, v):
        """The returned word carries the vector to a dominant one and back."""
        top, word = B3.to_dominant(v)
        assert B3.act_word(word, v) == top
        assert all(c >= 0 for c in B3._coroot_pairings(top))
        assert B3.act_word(B3.canonical_word(v), top) == v

    @given(lattice_b3, words_b3)
    @settings(max_examples=100, deadline=None)
    def test_dominant_conjugate_is_orbit_invariant(self, v, word):
        """Moving the input by any word leaves its dominant conjugate unchanged."""
        assert B3.to_dominant(B3.act_word(word, v))[0] == B3.to_dominant(v)[0]

    @given(st.tuples(st.integers(-6, 6), st.integers(-6, 6)))
    @settings(max_examples=100, deadline=None)
    def test_parabolic_dominant(self, v):
        """Dominance for W_{2} in G2 only moves the second coordinate."""
        top, word = G2.to_dominant(v, {2})
        assert G2.act_word(word, v) == top
        assert G2._coroot_pairings(top)[1] >= 0
        assert top[0] == v[0]

    def test_stabilizer(self):
        """Stabilizer of a fundamental coweight, and rejection of non-dominant input."""
        assert B3.stabilizer_simple_roots(B3.coweight(1)) == frozenset({2, 3})
        with pytest.raises(NotDominantError):
            RootSystem("A", 2).stabilizer_simple_roots((-1, 0))


class TestOrbits:
    """Orbits, coset representatives and group orders."""

    def test_orbit_of_theta(self):
        """The orbit of the highest root is the set of long roots."""
        for rs in (B3, G2, build_root_system("F", 4)):
            assert set(rs.orbit_with_words(rs.theta)) == rs.long_roots()

    def test_orbit_words(self):
        """Each orbit word carries the start vector to its orbit element."""
        v = (1, -2, 1)
        orbit = B3.orbit_with_words(v)
        assert v in orbit
        for u, word in orbit.items():
            assert B3.act_word(word, v) == u

    def test_parabolic_orbit(self):
        """The W_{Delta - 3} orbit of theta in B3 is the long part of F(3)."""
        orbit = B3.parabolic_orbit(B3.theta, {1, 2})
        assert set(orbit) == {(0, 1, 2), (1, 1, 2), (1, 2, 2)}
        for u, word in orbit.items():
            assert set(word) <= {1, 2}
            assert B3.act_word(word, B3.theta) == u

    def test_orbit_cap(self):
        """Orbits larger than the cap raise."""
        with pytest.raises(OrbitCapExceeded):
            B3.orbit_with_words((1, 2, 3), cap=2)

    def test_coweight_orbit(self):
        """A fundamental coweight of A2 has three conjugates."""
        rs = RootSystem("A", 2)
        assert len(rs.orbit_with_words(rs.coweight(1))) == 3

    def test_coset_reps(self):
        """Coset representatives start with the identity."""
        reps = B3.coset_reps({1, 2})
        assert len(reps) == 8
        assert reps[0] == ()
        assert len(B3.coset_reps()) == 1

    @pytest.mark.parametrize(
        "name, A", [("A3", {2}), ("B3", {1, 2}), ("C3", {1}), ("F4", {2, 3}), ("G2", {1})]
    )
    def test_coset_reps_act_distinctly(self, name, A):
        """Distinct representatives move a vector with stabilizer W_A to distinct places."""
        rs = build_root_system(name[0], int(name[1:]))
        reps = rs.coset_reps(A)
        start = tuple(
            sum(rs.weight(i)[k] for i in range(1, rs.rank + 1) if i not in A) for k in range(rs.rank)
        )
        assert len({rs.act_word(w, start) for w in reps}) == len(reps)
        assert len(reps) * rs.parabolic_order(A) == rs.weyl_group_order()

    @pytest.mark.parametrize(
        "family, rank, order",
        [("A", 3, 24), ("B", 3, 48), ("D", 4, 192), ("F", 4, 1152), ("G", 2, 12), ("E", 8, 696729600)],
    )
    def test_group_order(self, family, rank, order):
        """Closed-form Weyl group orders."""
        assert build_root_system(family, rank).weyl_group_order() == order

    def test_parabolic_order(self):
        """Parabolic orders as products over diagram components."""
        assert build_root_system("E", 8).parabolic_order(range(1, 8)) == 2903040
        assert B3.parabolic_order({1, 2}) == 6
        assert B3.parabolic_order({1, 3}) == 4

    def test_parabolic_order_e6_component(self):
        """An E6 component is not mistaken for B6, which has as many roots."""
        assert build_root_system("E", 7).parabolic_order(range(1, 7)) == 51840
        assert build_root_system("B", 6).parabolic_order() == 46080
        assert build_root_system("E", 6).parabolic_order() == 51840

    @pytest.mark.parametrize("family, rank", TYPES_UP_TO_RANK_8)
    def test_facet_orbit_times_stabilizer(self, family, rank):
        """|W omega_alpha^vee| * |W_{Delta - alpha}| = |W| for every maximal root."""
        rs = build_root_system(family, rank)
        simple = set(range(1, rank + 1))
        for alpha in rs.maximal_roots():
            orbit = rs.orbit_with_words(rs.coweight(alpha))
            assert len(orbit) * rs.parabolic_order(simple - {alpha}) == rs.weyl_group_order()


if __name__ == "__main__":
    pytest.main([__file__])
