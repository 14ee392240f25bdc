"""Tests for bitmask helpers"""
from core.subsets import (
    face_sort_key,
    iter_submasks,
    mask_of,
    maximal_masks,
    minimal_masks,
    popcount,
    vertex_pairs,
    vertices_of,
)


class TestMasks:
    """Test suite for mask conversion and ordering"""

    def test_mask_round_trip(self):
        """Test vertex 1 is the lowest bit"""
        assert mask_of((1, 3)) == 0b101
        assert vertices_of(0b101) == (1, 3)
        assert vertices_of(0) == ()

    def test_popcount(self):
        """Test counting set bits"""
        assert popcount(0b1011) == 3

    def test_face_sort_key(self):
        """Test smaller faces sort first, then lexicographically"""
        masks = [mask_of(f) for f in [(1, 2, 3), (2,), (1, 4), (1, 3)]]
        ordered = [vertices_of(m) for m in sorted(masks, key=face_sort_key)]
        assert ordered == [(2,), (1, 3), (1, 4), (1, 2, 3)]

    def test_iter_submasks(self):
        """Test every submask is produced once"""
        assert sorted(iter_submasks(0b101)) == [0, 1, 4, 5]

    def test_maximal_and_minimal(self):
        """Test inclusion-maximal and inclusion-minimal selection"""
        masks = [0b001, 0b011, 0b100, 0b011]
        assert maximal_masks(masks) == [0b100, 0b011]
        assert minimal_masks(masks) == [0b001, 0b100]

    def test_vertex_pairs(self):
        """Test pair order used by edge masks"""
        assert vertex_pairs(3) == ((1, 2), (1, 3), (2, 3))
        assert len(vertex_pairs(5)) == 10
