"""
Tests for the command-line front end: JSON on stdout and exit codes.
"""

import json

import pytest

from rootlength import RootSystem
from rootlength.cli import run


@pytest.fixture
def invoke(capsys):
    """Run the CLI and return (exit code, stdout, stderr)."""

    def _invoke(*argv):
        code = run(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _invoke


class TestLength:
    """length, decompose and positive-length."""

    def test_length(self, invoke):
        """length reports both lengths and the attaining facets."""
        code, out, _ = invoke("length", "--type", "B3", "--gamma", "1,0,2")
        assert code == 0
        data = json.loads(out)
        assert data["length"] == 2
        assert data["positive_length"] == 3
        assert data["attaining_facets"]

    def test_length_with_rank_and_decomposition(self, invoke):
        """A separate rank and a decomposition."""
        code, out, _ = invoke("length", "--type", "B", "--rank", "3", "--gamma", "1,0,2", "--decompose")
        assert code == 0
        data = json.loads(out)
        assert len(data["decomposition"]) == 2

    def test_length_computed_once(self, invoke, monkeypatch):
        """length --decompose computes the length once and the roots re-sum."""
        calls = []
        original = RootSystem.length

        def counting(self, gamma, with_decomposition=False):
            calls.append(with_decomposition)
            return original(self, gamma, with_decomposition=with_decomposition)

        monkeypatch.setattr(RootSystem, "length", counting)
        code, out, _ = invoke("length", "--type", "B3", "--gamma", "1,0,2", "--decompose")
        assert code == 0
        assert calls == [True]
        data = json.loads(out)
        assert len(data["decomposition"]) == data["length"] == 2
        assert [sum(c) for c in zip(*data["decomposition"])] == [1, 0, 2]

    def test_weight_basis(self, invoke):
        """Input in the weight basis."""
        code, out, _ = invoke("length", "--type", "B3", "--gamma", "0,0,2", "--basis", "weight")
        assert code == 0
        data = json.loads(out)
        assert data["gamma"] == [1, 2, 3]
        assert data["length"] == 2

    def test_negative_has_no_positive_length(self, invoke):
        """Positive length is null off the positive cone."""
        code, out, _ = invoke("length", "--type", "G2", "--gamma=-1,0")
        assert code == 0
        assert json.loads(out)["positive_length"] is None

    def test_product(self, invoke):
        """Lengths of a product type."""
        code, out, _ = invoke("length", "--type", "A2xB3", "--gamma", "1,1,1,0,2")
        assert code == 0
        data = json.loads(out)
        assert data["length"] == 3
        assert data["positive_length"] == 4
        assert "attaining_facets" not in data

    def test_decompose(self, invoke):
        """decompose returns roots summing to the input."""
        code, out, _ = invoke("decompose", "--type", "G2", "--gamma", "4,2")
        assert code == 0
        data = json.loads(out)
        assert data["length"] == 2
        assert [sum(c) for c in zip(*data["decomposition"])] == [4, 2]

    def test_positive_length(self, invoke):
        """positive-length alone."""
        code, out, _ = invoke("positive-length", "--type", "B3", "--gamma", "1,0,2")
        assert code == 0
        assert json.loads(out)["positive_length"] == 3


class TestStructure:
    """facets, faces and generators."""

    def test_facets(self, invoke):
        """Facet export fields."""
        code, out, _ = invoke("facets", "--type", "C3")
        assert code == 0
        data = json.loads(out)
        assert data["count"] == 8
        assert set(data["facets"][0]) == {"alpha", "tau", "lambda", "vertices"}

    def test_faces(self, invoke):
        """Index set summary and the full face list."""
        code, out, _ = invoke("faces", "--type", "A2", "--all")
        assert code == 0
        data = json.loads(out)
        assert [r["orbit_size"] for r in data["index_set"]] == [1, 3, 3, 6]
        assert len(data["faces"]) == 13

    def test_generators(self, invoke):
        """Exhaustive generators of a G2 facet."""
        code, out, _ = invoke("generators", "--type", "G2", "--facet", "1")
        assert code == 0
        data = json.loads(out)
        assert data["generators"] == [[2, 1], [4, 2]]
        assert data["certificate"] == "slab-exhaustive"

    def test_generators_criterion(self, invoke):
        """Generators through the properness criterion."""
        code, out, _ = invoke(
            "generators", "--type", "B3", "--facet", "3", "--method", "criterion", "--level-bound", "4"
        )
        assert code == 0
        data = json.loads(out)
        assert data["generators"] == [[1, 2, 3]]
        assert data["level_bound"] == "4/1"


class TestVerify:
    """verify and exit codes."""

    def test_verify_intro(self, invoke):
        """verify runs a named suite."""
        code, out, _ = invoke("verify", "--suite", "intro")
        assert code == 0
        data = json.loads(out)
        assert data["passed"]
        assert data["suites"][0]["suite"] == "intro"

    @pytest.mark.parametrize(
        "argv",
        [
            ["length", "--type", "H3", "--gamma", "1,0,2"],
            ["length", "--type", "B3", "--gamma", "1,0"],
            ["length", "--type", "B3", "--gamma", "1,x,2"],
            ["length", "--type", "B3", "--gamma", "1,0,1", "--basis", "weight"],
            ["positive-length", "--type", "B3", "--gamma", "1,-1,0"],
            ["facets", "--type", "A2xB3"],
            ["generators", "--type", "B3", "--facet", "2"],
            ["verify", "--suite", "nope"],
            ["frobnicate"],
        ],
    )
    def test_invalid_input(self, invoke, argv):
        """Invalid input exits with code 2 and prints nothing on stdout."""
        code, out, _ = invoke(*argv)
        assert code == 2
        assert out == ""


if __name__ == "__main__":
    pytest.main([__file__])
