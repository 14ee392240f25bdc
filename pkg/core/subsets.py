"""
Bitmask helpers for finite vertex sets

Vertex v (1-based) is bit v-1. All exhaustive algorithms in the package work
on these masks and convert back to sorted vertex tuples at the boundary.
"""

from functools import lru_cache
from typing import Iterable, Iterator, List, Tuple


def bit(v: int) -> int:
    """Mask of the single vertex v"""
    return 1 << (v - 1)


def full_mask(n: int) -> int:
    """Mask of every vertex 1..n"""
    return (1 << n) - 1


def mask_of(vertices: Iterable[int]) -> int:
    """Mask with the bits of the given vertices set"""
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def vertices_of(mask: int) -> Tuple[int, ...]:
    """Sorted vertex tuple of a mask"""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def popcount(mask: int) -> int:
    """Number of set bits"""
    return bin(mask).count("1")


def is_submask(inner: int, outer: int) -> bool:
    """True when every bit of inner is set in outer"""
    return inner & ~outer == 0


def face_sort_key(mask: int) -> Tuple[int, Tuple[int, ...]]:
    """Canonical face order: size first, then lexicographic"""
    return popcount(mask), vertices_of(mask)


def iter_submasks(mask: int) -> Iterator[int]:
    """Every submask of mask, including 0 and mask itself"""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def maximal_masks(masks: Iterable[int]) -> List[int]:
    """Inclusion-maximal nonzero masks in canonical face order"""
    unique = sorted({m for m in masks if m}, key=popcount, reverse=True)
    kept: List[int] = []
    for m in unique:
        if not any(is_submask(m, k) for k in kept):
            kept.append(m)
    return sorted(kept, key=face_sort_key)


def minimal_masks(masks: Iterable[int]) -> List[int]:
    """Inclusion-minimal masks in canonical face order"""
    unique = sorted(set(masks), key=popcount)
    kept: List[int] = []
    for m in unique:
        if not any(is_submask(k, m) for k in kept):
            kept.append(m)
    return sorted(kept, key=face_sort_key)


@lru_cache(maxsize=None)
def vertex_pairs(n: int) -> Tuple[Tuple[int, int], ...]:
    """Pairs (i, j), i < j, in lexicographic order; bit k of an edge mask is pair k"""
    return tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))
