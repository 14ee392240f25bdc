"""
Complexes built from graphs, and graph-flavoured properties of complexes
Edge, independence, generalized independence, dominance and neighborhood
complexes; the flag, balanced and pencil predicates
"""

import logging
from typing import Dict, List, Optional

from .complexes import (
    check_guard,
    complex_from_masks,
    dimension,
    is_pure,
    minimal_nonface_masks,
    one_skeleton,
)
from .models import BalancedColoring, Graph, SimplicialComplex
from .subsets import bit, full_mask, is_submask, minimal_masks, popcount

logger = logging.getLogger(__name__)

GRAPH_COMPLEX_LIMIT = 20
COLORING_LIMIT = 12


def edge_complex(G: Graph) -> SimplicialComplex:
    """G as a 1-dimensional complex; isolated vertices are 0-faces"""
    adj = G.adjacency()
    masks = [bit(u) | bit(v) for u, v in G.edges]
    masks += [bit(v) for v in range(1, G.vertex_count + 1) if not adj[v - 1]]
    return complex_from_masks(G.vertex_count, masks)


def _independent_masks(adj, n: int) -> List[int]:
    independent = [True] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        rest = mask ^ low
        independent[mask] = independent[rest] and not adj[low.bit_length() - 1] & rest
    return [m for m in range(1 << n) if independent[m]]


def independence_complex(G: Graph) -> SimplicialComplex:
    """Faces are the independent sets of G"""
    check_guard("independence complex", G.vertex_count, GRAPH_COMPLEX_LIMIT)
    return complex_from_masks(G.vertex_count, _independent_masks(G.adjacency(), G.vertex_count))


def gen_independence_complex(K: SimplicialComplex) -> SimplicialComplex:
    """Subsets of [n] containing no facet of K; the facets of K become its minimal nonfaces"""
    n = K.vertex_count
    check_guard("generalized independence complex", n, GRAPH_COMPLEX_LIMIT)
    facets = K.facet_masks
    faces = [m for m in range(1 << n) if not any(is_submask(f, m) for f in facets)]
    return complex_from_masks(n, faces)


def _closed_neighborhoods(G: Graph) -> List[int]:
    return [a | bit(v) for v, a in enumerate(G.adjacency(), start=1)]


def dominance_complex(G: Graph) -> SimplicialComplex:
    """Faces are complements of dominating sets; facets complement the minimal ones"""
    n = G.vertex_count
    check_guard("dominance complex", n, GRAPH_COMPLEX_LIMIT)
    closed = _closed_neighborhoods(G)
    dominating = [m for m in range(1 << n) if all(m & c for c in closed)]
    everything = full_mask(n)
    return complex_from_masks(n, [everything ^ m for m in minimal_masks(dominating)])


def neighborhood_complex(G: Graph) -> SimplicialComplex:
    """Faces are sets with a common neighbor; facets are the maximal open neighborhoods"""
    return complex_from_masks(G.vertex_count, [a for a in G.adjacency() if a])


def closed_neighborhood_complex(G: Graph) -> SimplicialComplex:
    """Complex whose facets are the inclusion-minimal closed neighborhoods N[v]"""
    return complex_from_masks(G.vertex_count, minimal_masks(_closed_neighborhoods(G)))


def is_flag(K: SimplicialComplex) -> bool:
    """Every minimal nonface has exactly two vertices"""
    return all(popcount(m) == 2 for m in minimal_nonface_masks(K))


def find_balanced_coloring(K: SimplicialComplex) -> Optional[BalancedColoring]:
    """Proper coloring of the 1-skeleton with dimension + 1 colors, or None

    Only vertices that are faces get a color. Backtracking visits vertices by
    decreasing degree and tries colors in increasing order.
    """
    n = K.vertex_count
    check_guard("balanced coloring search", n, COLORING_LIMIT)
    d = dimension(K)
    if d < 0:
        return BalancedColoring(colors={}, color_count=0)
    color_count = d + 1
    adj = one_skeleton(K).adjacency()
    order = sorted(K.vertices, key=lambda v: (-popcount(adj[v - 1]), v))
    colors: Dict[int, int] = {}

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        taken = {colors[u] for u in colors if adj[v - 1] & bit(u)}
        for c in range(color_count):
            if c in taken:
                continue
            colors[v] = c
            if extend(k + 1):
                return True
            del colors[v]
        return False

    if not extend(0):
        return None
    return BalancedColoring(colors=dict(sorted(colors.items())), color_count=color_count)


def is_balanced(K: SimplicialComplex) -> bool:
    """True when K has a balanced coloring"""
    return find_balanced_coloring(K) is not None


def is_pencil(K: SimplicialComplex) -> bool:
    """Pure of dimension d, with n - d facets sharing at least d common vertices"""
    if not K.facets or not is_pure(K):
        return False
    d = dimension(K)
    if len(K.facets) != K.vertex_count - d:
        return False
    common = full_mask(K.vertex_count)
    for f in K.facet_masks:
        common &= f
    return popcount(common) >= d
