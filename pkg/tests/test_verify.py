"""
Tests for the acceptance suites and their reports.
"""

import json

import pytest

from rootlength import SUITES, SuiteReport, run_suite
from rootlength.operation.verify import SMALL_TYPES, box_points, sample_points


class TestSuiteReport:
    """Report bookkeeping and serialization."""

    def test_check(self):
        """Checks count and failures are recorded."""
        report = SuiteReport("demo")
        assert report.check(True, gamma=[1])
        assert report.passed
        assert not report.check(False, gamma=[2])
        assert not report.passed
        assert report.checks == 2
        assert report.failures == [{"gamma": [2]}]

    def test_to_dict(self):
        """Reports serialize to JSON."""
        report = SuiteReport("demo")
        report.skip(gamma=[1, 2], r_max=6)
        data = report.to_dict()
        assert data["suite"] == "demo"
        assert data["passed"]
        assert data["skipped"] == [{"gamma": [1, 2], "r_max": 6}]
        json.dumps(data)


class TestHelpers:
    """Point generators."""

    def test_box_points(self):
        """Box points come in lexicographic order."""
        points = box_points(2, 0, 1)
        assert points == [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_sample_points(self):
        """Samples are reproducible and stay in the box."""
        first = sample_points(3, -2, 2, 10, seed=7)
        assert first == sample_points(3, -2, 2, 10, seed=7)
        assert len(first) == 10
        assert all(-2 <= x <= 2 for p in first for x in p)


class TestSuites:
    """Fast suites run in full; the exhaustive ones are marked slow."""

    def test_unknown_suite(self):
        """Unknown suite names are rejected."""
        with pytest.raises(ValueError):
            run_suite("nope")

    def test_intro(self):
        """The introductory B3 example."""
        (report,) = run_suite("intro")
        assert report.passed
        assert report.details["length"] == 2
        assert report.details["positive_length"] == 3

    def test_strictness(self):
        """Length 2 against positive length 3 in every strict type."""
        (report,) = run_suite("strictness", max_rank=4)
        assert report.passed
        assert set(report.details) == {"B3", "B4", "D4", "F4", "G2"}

    def test_type_a(self):
        """Type A identities over a full box."""
        (report,) = run_suite("typeA", max_rank=3)
        assert report.passed
        assert report.checks == 4 + 16 + 64

    def test_type_c(self):
        """Type C identity."""
        (report,) = run_suite("typeC", max_rank=3)
        assert report.passed

    def test_length_oracle_small(self):
        """Exhaustive oracle agreement up to rank 2."""
        (report,) = run_suite("length-oracle", max_rank=2, samples=None)
        assert report.passed
        assert report.details["G2"] == 49

    def test_none_options_dropped(self):
        """Options given as None fall back to defaults."""
        (report,) = run_suite("intro", max_rank=None, seed=None)
        assert report.passed

    @pytest.mark.slow
    @pytest.mark.parametrize("name", ["geometry", "lattice", "normality", "integral-closure"])
    def test_structural_suites(self, name):
        """Structural suites pass up to rank 3."""
        (report,) = run_suite(name, max_rank=3)
        assert report.passed, report.failures[:5]

    @pytest.mark.slow
    def test_theorem_b(self):
        """Exceptional facet generators up to rank 4."""
        (report,) = run_suite("theoremB", max_rank=4, level_bound=5)
        assert report.passed, report.failures[:5]

    def test_small_types_include_c2(self):
        """C2 is among the small types the structural suites cover."""
        assert "C2" in SMALL_TYPES
        assert [n for n in SMALL_TYPES if n.startswith("C")] == ["C2", "C3", "C4"]

    @pytest.mark.slow
    def test_integral_closure_rank_2(self):
        """Integral closure holds up to rank 2, C2 included."""
        (report,) = run_suite("integral-closure", max_rank=2)
        assert report.passed, report.failures[:5]

    def test_registry(self):
        """Every suite is registered."""
        assert set(SUITES) == {
            "length-oracle", "intro", "theoremB", "normality", "integral-closure",
            "typeA", "typeC", "strictness", "geometry", "lattice",
        }


if __name__ == "__main__":
    pytest.main([__file__])
