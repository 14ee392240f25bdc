"""Tests for shifted complexes"""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.complexes import complex_from_facets, cone, dimension, relabel, simplex
from core.enumeration import complex_list, enumerate_complexes
from core.errors import EnumerationGuardError, LabelingError, StarError
from core.graphical import edge_complex, gen_independence_complex
from core.models import Graph, VertexLabeling
from core.shifted import (
    brute_force_shifted_labeling,
    canonical_shifted_form,
    dominates,
    enumerate_shifted_complexes,
    find_shifted_labeling,
    is_order_ideal,
    is_shiftable,
    is_shifted_under,
    padded_less_or_equal,
    star_d,
)
from core.threshold import is_threshold


class TestPaddedOrder:
    """Test suite for padded_less_or_equal"""

    def test_examples(self):
        """Test padding with zeros on the left"""
        assert padded_less_or_equal((2, 4), (1, 3, 5, 6)) is True
        assert padded_less_or_equal((1, 4), (2, 4)) is True
        assert padded_less_or_equal((2, 4), (1, 4)) is False

    def test_larger_set_never_below(self):
        """Test more elements never sit below fewer"""
        assert padded_less_or_equal((1, 2, 3), (5, 6)) is False

    def test_empty_set_below_everything(self):
        """Test the empty set is the bottom element"""
        assert padded_less_or_equal((), (1,)) is True
        assert padded_less_or_equal((), ()) is True


class TestShiftedUnder:
    """Test suite for dominance and is_shifted_under"""

    def test_example_is_shifted(self, shifted_example):
        """Test the example complex is shifted under the identity"""
        assert is_shifted_under(shifted_example, VertexLabeling.identity(4)) is True

    def test_dominance(self, shifted_example):
        """Test vertex 1 dominates 4 but not the other way round"""
        assert dominates(shifted_example, 1, 4) is True
        assert dominates(shifted_example, 4, 1) is False

    def test_reversed_labeling_fails(self, shifted_example):
        """Test the reversed labeling does not make the example shifted"""
        assert is_shifted_under(shifted_example, VertexLabeling.from_order([4, 3, 2, 1])) is False

    def test_simplex_under_any_labeling(self):
        """Test the full simplex is shifted under every labeling"""
        assert is_shifted_under(simplex(3), VertexLabeling.from_order([2, 3, 1])) is True

    def test_labeling_size_mismatch(self, shifted_example):
        """Test a labeling of the wrong size raises LabelingError"""
        with pytest.raises(LabelingError):
            is_shifted_under(shifted_example, VertexLabeling.identity(3))


class TestLabelingSearch:
    """Test suite for find_shifted_labeling"""

    def test_path_not_shiftable(self, path4):
        """Test the path on four vertices is not shiftable"""
        assert find_shifted_labeling(edge_complex(path4)) is None

    def test_independence_chain(self, nonpure_shifted):
        """Test I(K) is not shiftable but I(I(I(K))) is, after swapping 3 and 4"""
        I1 = gen_independence_complex(nonpure_shifted)
        I3 = gen_independence_complex(gen_independence_complex(I1))
        assert is_shiftable(I1) is False
        assert is_shifted_under(I3, VertexLabeling.identity(5)) is False
        labeling = find_shifted_labeling(I3)
        assert labeling is not None
        assert is_shifted_under(I3, labeling) is True

    def test_found_labeling_verifies(self, shifted_example):
        """Test the returned labeling passes is_shifted_under"""
        shuffled = relabel(shifted_example, {1: 3, 2: 4, 3: 1, 4: 2})
        labeling = find_shifted_labeling(shuffled)
        assert labeling is not None
        assert is_shifted_under(shuffled, labeling) is True

    def test_canonical_form(self, shifted_example):
        """Test the canonical form is shifted under the identity"""
        shuffled = relabel(shifted_example, {1: 3, 2: 4, 3: 1, 4: 2})
        canonical = canonical_shifted_form(shuffled)
        assert is_shifted_under(canonical, VertexLabeling.identity(4)) is True
        assert canonical_shifted_form(complex_from_facets([(1, 2), (3, 4)], 4)) is None

    def test_guard(self):
        """Test the search refuses n above its guard"""
        with pytest.raises(EnumerationGuardError):
            find_shifted_labeling(complex_from_facets([(1, 2)], 11))

    def test_agrees_with_brute_force(self):
        """Test the backtracking search against the permutation oracle for n <= 4"""
        for n in range(1, 5):
            for K in enumerate_complexes(n):
                assert (find_shifted_labeling(K) is None) == (brute_force_shifted_labeling(K) is None)

    @pytest.mark.slow
    def test_agrees_with_brute_force_n5(self):
        """Test the backtracking search against the permutation oracle for n = 5"""
        for K in enumerate_complexes(5):
            assert (find_shifted_labeling(K) is None) == (brute_force_shifted_labeling(K) is None)

    @settings(max_examples=80, deadline=None)
    @given(st.integers(min_value=1, max_value=6).flatmap(
        lambda n: st.tuples(st.just(n), st.integers(min_value=0, max_value=2 ** (n * (n - 1) // 2) - 1))
    ))
    def test_graphs_shiftable_iff_threshold(self, case):
        """Test a graph is a shiftable 1-complex exactly when it is threshold"""
        n, mask = case
        G = Graph.from_edge_mask(n, mask)
        assert is_shiftable(edge_complex(G)) == is_threshold(G)


class TestOrderIdeal:
    """Test suite for is_order_ideal"""

    def test_example_is_order_ideal(self, shifted_example):
        """Test the example complex is an order ideal"""
        assert is_order_ideal(shifted_example) is True

    def test_not_order_ideal(self):
        """Test 24 without 12 violates the padded order"""
        assert is_order_ideal(complex_from_facets([(2, 4), (1,), (3,)], 4)) is False

    def test_no_facets(self):
        """Test the complex with only the empty face is an order ideal"""
        assert is_order_ideal(complex_from_facets([], 3)) is True

    def test_matches_identity_shiftedness(self):
        """Test order ideals are exactly the complexes shifted under the identity"""
        for n in range(1, 5):
            identity = VertexLabeling.identity(n)
            for K in enumerate_complexes(n):
                assert is_order_ideal(K) == is_shifted_under(K, identity)

    @pytest.mark.slow
    def test_matches_identity_shiftedness_n5(self):
        """Test the order-ideal check against is_shifted_under for every complex on five vertices"""
        identity = VertexLabeling.identity(5)
        for K in complex_list(5):
            assert is_order_ideal(K) == is_shifted_under(K, identity)


class TestStar:
    """Test suite for star_d"""

    def test_star_on_triangle(self):
        """Test star_2 and star_3 over a triangle"""
        triangle = complex_from_facets([(1, 2, 3)], 4)
        assert star_d(triangle, 4, 2).facets == ((1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4))
        assert star_d(triangle, 4, 3).facets == ((1, 2, 3, 4),)

    def test_star_onto_point(self):
        """Test star_1 onto a point grows the vertex count"""
        K = star_d(complex_from_facets([(1,)], 1), 2, 1)
        assert K.vertex_count == 2
        assert K.facets == ((1, 2),)

    def test_star_onto_ghost(self):
        """Test a ghost label may receive the new vertex"""
        K = star_d(complex_from_facets([(1, 2)], 3), 3, 1)
        assert K.facets == ((1, 2), (1, 3), (2, 3))

    def test_top_star_is_cone(self, shifted_example):
        """Test star above the dimension equals the cone"""
        assert star_d(shifted_example, 5, dimension(shifted_example) + 1) == cone(shifted_example)

    def test_existing_vertex(self, shifted_example):
        """Test joining an existing vertex raises StarError"""
        with pytest.raises(StarError):
            star_d(shifted_example, 2, 1)

    def test_dimension_below_one(self, shifted_example):
        """Test d < 1 raises StarError"""
        with pytest.raises(StarError):
            star_d(shifted_example, 5, 0)


class TestEnumerateShifted:
    """Test suite for enumerate_shifted_complexes"""

    def test_small_counts(self):
        """Test counts of shifted complexes using every vertex"""
        assert len(list(enumerate_shifted_complexes(1))) == 1
        assert len(list(enumerate_shifted_complexes(2))) == 2
        assert len(list(enumerate_shifted_complexes(3))) == 5

    def test_shifted_graphs(self):
        """Test shifted 1-complexes on n vertices number 2^(n-1)"""
        graphs = list(enumerate_shifted_complexes(4, max_face_size=2))
        assert len(graphs) == 8
        assert len({K.facets for K in graphs}) == 8

    def test_every_output_is_shifted(self):
        """Test outputs are shifted under the identity and have no ghosts"""
        for K in enumerate_shifted_complexes(4):
            assert is_shifted_under(K, VertexLabeling.identity(4)) is True
            assert K.ghost_vertices == ()

    def test_guard(self):
        """Test the enumeration refuses n above its guard"""
        with pytest.raises(EnumerationGuardError):
            list(enumerate_shifted_complexes(8))
