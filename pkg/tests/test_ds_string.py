"""Tests for construction strings"""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.complexes import are_isomorphic, dimension, is_pure, one_skeleton, relabel
from core.ds_string import (
    NAMING_CHRONOLOGICAL,
    canonicalize,
    coloring_from_string,
    encode_threshold,
    enumerate_canonical_strings,
    evaluate,
    flag_transform,
    is_one_star_per_dimension,
    label_from_string,
    parse_ds,
)
from core.errors import DsParseError, DsTransformError, NotThresholdError
from core.graphical import independence_complex, is_flag
from core.models import DsKind, DsString, Graph, VertexLabeling
from core.shifted import is_shifted_under

bar_free_strings = st.lists(st.sampled_from("DS"), max_size=6).map(lambda tail: parse_ds("D" + "".join(tail)))


class TestParse:
    """Test suite for parse_ds"""

    def test_example(self):
        """Test the worked example parses with two bars and eight vertices"""
        s = parse_ds("DDSS|SSD|S")
        assert len(s.tokens) == 10
        assert s.bar_count == 2
        assert s.vertex_count == 8

    def test_whitespace_and_case(self):
        """Test whitespace is ignored and lowercase accepted"""
        assert parse_ds(" d d s ").render() == "DDS"

    def test_bar_runs(self):
        """Test a run of bars before an S is accepted"""
        assert parse_ds("D||S").bar_count == 2

    def test_bar_without_star(self):
        """Test a bar followed only by D tokens is rejected"""
        with pytest.raises(DsParseError):
            parse_ds("DD|D")

    def test_trailing_bar(self):
        """Test a trailing bar is rejected with its position"""
        with pytest.raises(DsParseError) as exc:
            parse_ds("DS|")
        assert exc.value.position == 2

    def test_illegal_character(self):
        """Test an unknown character is rejected"""
        with pytest.raises(DsParseError):
            parse_ds("DDXS")

    def test_empty(self):
        """Test an empty string is rejected"""
        with pytest.raises(DsParseError):
            parse_ds("   ")


class TestCanonicalize:
    """Test suite for canonicalize"""

    def test_example_is_canonical(self):
        """Test the worked example is already canonical"""
        assert canonicalize(parse_ds("DDSS|SSD|S")).render() == "DDSS|SSD|S"

    def test_d_moves_left_past_bars(self):
        """Test an equivalent form canonicalizes to the example"""
        assert canonicalize(parse_ds("DDSS|SS|DS")).render() == "DDSS|SSD|S"

    def test_first_vertex_becomes_d(self):
        """Test a leading S turns into D"""
        assert canonicalize(parse_ds("SDS")).render() == "DDS"
        assert canonicalize(parse_ds("|S|S")).render() == "D||S"

    def test_same_complex(self):
        """Test canonicalization does not change the evaluated complex"""
        s = parse_ds("DDSS|SS|DS")
        assert evaluate(canonicalize(s)) == evaluate(s)


class TestLabels:
    """Test suite for label_from_string"""

    def test_example_labels(self):
        """Test stars are labeled right to left, then D vertices left to right"""
        labels = label_from_string(parse_ds("DDSS|SSD|S"))
        assert tuple(labels.rank(i) for i in range(1, 9)) == (6, 7, 5, 4, 3, 2, 8, 1)

    def test_all_disjoint(self):
        """Test a bar-free all-D string keeps creation order"""
        assert label_from_string(parse_ds("DDD")) == VertexLabeling.identity(3)


class TestEvaluate:
    """Test suite for evaluate"""

    def test_single_vertex(self):
        """Test the one-letter string"""
        K = evaluate(parse_ds("D"))
        assert K.vertex_count == 1
        assert K.facets == ((1,),)

    def test_path(self):
        """Test DDS builds a path centred at label 1"""
        assert evaluate(parse_ds("DDS")).facets == ((1, 2), (1, 3))

    def test_example(self):
        """Test the worked example: dimension 3, fifteen facets"""
        K = evaluate(parse_ds("DDSS|SSD|S"))
        assert K.vertex_count == 8
        assert dimension(K) == 3
        assert len(K.facets) == 15
        assert (1, 8) in K.facets
        assert (1, 2, 3, 4) in K.facets
        assert is_shifted_under(K, VertexLabeling.identity(8)) is True

    def test_chronological_naming(self):
        """Test chronological naming relabels to the default naming"""
        s = parse_ds("DDSS|SSD|S")
        labels = label_from_string(s)
        chronological = evaluate(s, naming=NAMING_CHRONOLOGICAL)
        assert relabel(chronological, labels.ranks) == evaluate(s)
        assert is_shifted_under(chronological, labels) is True

    def test_unknown_naming(self):
        """Test an unknown naming raises ValueError"""
        with pytest.raises(ValueError):
            evaluate(parse_ds("DS"), naming="random")

    def test_strings_build_shifted_complexes(self):
        """Test every canonical string on up to four vertices is shifted under the identity"""
        for n in range(1, 5):
            for s in enumerate_canonical_strings(n):
                assert is_shifted_under(evaluate(s), VertexLabeling.identity(n)) is True


class TestThresholdStrings:
    """Test suite for encode_threshold and flag_transform"""

    def test_encode_examples(self, path3, star4):
        """Test strings of small threshold graphs"""
        assert encode_threshold(Graph(vertex_count=3, edges=[(1, 2), (1, 3), (2, 3)])).render() == "DSS"
        assert encode_threshold(Graph(vertex_count=3)).render() == "DDD"
        assert encode_threshold(path3).render() == "DDS"
        assert encode_threshold(star4).render() == "DDDS"

    def test_encode_not_threshold(self, path4):
        """Test the path on four vertices has no construction string"""
        with pytest.raises(NotThresholdError) as exc:
            encode_threshold(path4)
        assert exc.value.stuck_vertices == (1, 2, 3, 4)

    def test_flag_transform_example(self):
        """Test D becomes |S, S becomes D and the leading bar goes"""
        assert flag_transform(parse_ds("DDSDSDSSD")).render() == "S|SD|SD|SDD|S"

    def test_flag_transform_rejects_bars(self):
        """Test strings with bars are outside the transform's domain"""
        with pytest.raises(DsTransformError):
            flag_transform(parse_ds("D|S"))

    @settings(max_examples=60, deadline=None)
    @given(bar_free_strings)
    def test_flag_transform_builds_independence_complex(self, s):
        """Test the transformed string evaluates to the independence complex"""
        G = one_skeleton(evaluate(s))
        assert are_isomorphic(evaluate(flag_transform(s)), independence_complex(G))

    @settings(max_examples=60, deadline=None)
    @given(bar_free_strings)
    def test_encode_rebuilds_graph(self, s):
        """Test the string read back from a threshold graph builds the same graph"""
        K = evaluate(s)
        assert are_isomorphic(evaluate(encode_threshold(one_skeleton(K))), K)


class TestColoring:
    """Test suite for one-star-per-dimension strings and their coloring"""

    def test_one_star_per_dimension(self):
        """Test the shape predicate"""
        assert is_one_star_per_dimension(parse_ds("DDDDS|S|S")) is True
        assert is_one_star_per_dimension(parse_ds("DDSS|S")) is False
        assert is_one_star_per_dimension(parse_ds("DS|SS")) is False

    def test_block_coloring(self):
        """Test each block gets its own color and every facet is rainbow"""
        s = parse_ds("DDDDS|S|S")
        coloring = coloring_from_string(s)
        assert coloring.color_count == 4
        assert coloring.colors == {1: 3, 2: 2, 3: 1, 4: 0, 5: 0, 6: 0, 7: 0}
        K = evaluate(s)
        assert is_pure(K) is True
        for facet in K.facets:
            assert len({coloring.colors[v] for v in facet}) == len(facet)

    def test_one_star_strings_build_flag_complexes(self):
        """Test every canonical one-star-per-dimension string up to six vertices evaluates to a flag complex"""
        checked = 0
        for n in range(1, 7):
            for s in enumerate_canonical_strings(n):
                if is_one_star_per_dimension(s):
                    assert is_flag(evaluate(s)) is True, s.render()
                    checked += 1
        assert checked == 120

    def test_coloring_requires_shape(self):
        """Test strings with two stars in a dimension are rejected"""
        with pytest.raises(DsTransformError):
            coloring_from_string(parse_ds("DSS"))


class TestEnumerateStrings:
    """Test suite for enumerate_canonical_strings"""

    def test_counts(self):
        """Test counts with the default and a reduced bar budget"""
        assert [s.render() for s in enumerate_canonical_strings(1)] == ["D"]
        assert [s.render() for s in enumerate_canonical_strings(2)] == ["DD", "DS", "D|S"]
        assert len(list(enumerate_canonical_strings(3))) == 13
        assert len(list(enumerate_canonical_strings(3, max_bars=1))) == 8

    def test_outputs_are_canonical(self):
        """Test every output starts with D and is its own canonical form"""
        for s in enumerate_canonical_strings(4):
            assert s.tokens[0] is DsKind.DISJOINT
            assert canonicalize(s) == s
            assert parse_ds(s.render()) == s

    def test_zero_vertices(self):
        """Test no strings on zero vertices"""
        assert list(enumerate_canonical_strings(0)) == []
