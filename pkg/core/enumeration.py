"""
Exhaustive enumeration of labeled graphs and simplicial complexes
Orders are deterministic so harness shards can be addressed by index
"""

import logging
from functools import lru_cache
from typing import Iterator, List, Optional, Tuple

from .complexes import check_guard, complex_from_masks, is_pure
from .models import Graph, SimplicialComplex
from .subsets import face_sort_key, full_mask, is_submask

logger = logging.getLogger(__name__)

GRAPH_LIMIT = 7
COMPLEX_LIMIT = 6

# antichains of nonempty subsets of [n], the empty antichain included
ANTICHAIN_COUNTS = {1: 2, 2: 5, 3: 19, 4: 167, 5: 7580, 6: 7828353}


def graph_count(n: int) -> int:
    """Number of labeled graphs on n vertices"""
    return 2 ** (n * (n - 1) // 2)


def graph_at(n: int, index: int) -> Graph:
    """The graph whose edge mask is index"""
    return Graph.from_edge_mask(n, index)


def enumerate_graphs(
    n: int, start: int = 0, stop: Optional[int] = None, limit: int = GRAPH_LIMIT
) -> Iterator[Graph]:
    """Labeled graphs on [n] by ascending edge mask, optionally a slice of them"""
    check_guard("graph enumeration", n, limit)
    stop = graph_count(n) if stop is None else min(stop, graph_count(n))
    for mask in range(start, stop):
        yield Graph.from_edge_mask(n, mask)


def _antichain_masks(n: int) -> Iterator[Tuple[int, ...]]:
    candidates = sorted(range(1, full_mask(n) + 1), key=face_sort_key)
    comparable = []
    for a in candidates:
        bits = 0
        for k, b in enumerate(candidates):
            if is_submask(a, b) or is_submask(b, a):
                bits |= 1 << k
        comparable.append(bits)

    def walk(allowed: int, chosen: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        yield chosen
        rest = allowed
        while rest:
            low = rest & -rest
            k = low.bit_length() - 1
            rest ^= low
            yield from walk(rest & ~comparable[k], chosen + (candidates[k],))

    yield from walk((1 << len(candidates)) - 1, ())


def enumerate_complexes(
    n: int, pure_only: bool = False, limit: int = COMPLEX_LIMIT
) -> Iterator[SimplicialComplex]:
    """Every complex on [n], one per antichain of facets, in a fixed order

    Ghost vertices are allowed, so the count is the number of antichains of
    nonempty subsets of [n].
    """
    check_guard("complex enumeration", n, limit)
    for antichain in _antichain_masks(n):
        K = complex_from_masks(n, antichain)
        if pure_only and not is_pure(K):
            continue
        yield K


@lru_cache(maxsize=8)
def complex_list(n: int, limit: int = COMPLEX_LIMIT) -> List[SimplicialComplex]:
    """Materialized enumerate_complexes, cached per process"""
    return list(enumerate_complexes(n, limit=limit))
