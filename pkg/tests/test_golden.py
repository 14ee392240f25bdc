"""Tests for the golden replays"""
from core import golden
from core.errors import StarError
from core.golden import REPLAYS, example_complex, golden_examples, independence_chain
from core.models import TheoremId


class TestGoldenExamples:
    """Test suite for golden_examples"""

    def test_all_replays_pass(self):
        """Test every worked example reproduces"""
        report = golden_examples()
        assert report.theorem is TheoremId.GOLDEN
        assert report.bound == 0
        assert report.checked == len(REPLAYS)
        assert report.counterexamples == []

    def test_replay_names_unique(self):
        """Test replay names identify their example"""
        names = [name for name, _ in REPLAYS]
        assert len(names) == len(set(names))

    def test_mismatch_becomes_counterexample(self, mocker):
        """Test a replay returning a message is reported"""
        mocker.patch.object(golden, "REPLAYS", [("ok", lambda: None), ("broken", lambda: "mismatch")])
        report = golden_examples()
        assert report.checked == 2
        assert [(c.input, c.detail) for c in report.counterexamples] == [("broken", "mismatch")]
        assert report.counterexamples[0].index == 1

    def test_raising_replay(self, mocker):
        """Test a replay raising a library error is reported, not propagated"""

        def explode():
            raise StarError("bad star")

        mocker.patch.object(golden, "REPLAYS", [("explodes", explode)])
        report = golden_examples()
        assert report.counterexamples[0].detail == "raised StarError: bad star"


class TestFixtures:
    """Test suite for the example builders"""

    def test_example_complex(self):
        """Test the example complex"""
        assert example_complex().facets == ((1, 4), (2, 4), (1, 2, 3))

    def test_chain(self):
        """Test the independence chain has four members on five vertices"""
        chain = independence_chain()
        assert len(chain) == 4
        assert all(K.vertex_count == 5 for K in chain)
        assert chain[1].facets == ((1, 2), (1, 3), (2, 3, 5), (3, 4, 5))
