"""
Shifted complexes
Padded componentwise order, vertex dominance, shifted labeling search,
order-ideal test, the star_d operation and enumeration of shifted complexes
"""

import logging
from itertools import permutations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from .complexes import (
    ENUMERATION_LIMIT,
    check_guard,
    complex_from_masks,
    face_masks,
    minimal_nonface_masks,
    relabel,
)
from .errors import LabelingError, StarError
from .models import SimplicialComplex, VertexLabeling
from .subsets import bit, face_sort_key, full_mask, is_submask, popcount, vertices_of

logger = logging.getLogger(__name__)

SEARCH_LIMIT = 10
BRUTE_FORCE_LIMIT = 7
SHIFTED_ENUMERATION_LIMIT = 7


def padded_less_or_equal(x: Iterable[int], y: Iterable[int]) -> bool:
    """Componentwise order after sorting and left-padding the shorter set with zeros

    A set with more elements is never below a smaller one; the empty set is
    below everything.
    """
    xs = sorted(x)
    ys = sorted(y)
    if len(xs) > len(ys):
        return False
    xs = [0] * (len(ys) - len(xs)) + xs
    return all(a <= b for a, b in zip(xs, ys))


def _padded_leq_masks(x: int, y: int) -> bool:
    return padded_less_or_equal(vertices_of(x), vertices_of(y))


def _dominates(facet_masks: Sequence[int], v: int, w: int) -> bool:
    """v can replace w in every facet containing w but not v"""
    vb, wb = bit(v), bit(w)
    for facet in facet_masks:
        if facet & wb and not facet & vb:
            swapped = (facet & ~wb) | vb
            if not any(is_submask(swapped, f) for f in facet_masks):
                return False
    return True


def dominates(K: SimplicialComplex, v: int, w: int) -> bool:
    """Whether every face F with w in F, v not in F has (F - w) + v as a face

    Checking facets is enough: a face missing the swap lies in a facet that
    already misses it.
    """
    return _dominates(K.facet_masks, v, w)


def _require_cover(K: SimplicialComplex, labeling: VertexLabeling) -> None:
    if labeling.size != K.vertex_count:
        raise LabelingError(
            f"labeling covers {labeling.size} vertices, complex has {K.vertex_count}"
        )


def is_shifted_under(K: SimplicialComplex, labeling: VertexLabeling) -> bool:
    """Whether smaller ranks can always replace larger ones in faces"""
    _require_cover(K, labeling)
    facets = K.facet_masks
    order = labeling.order()
    return all(_dominates(facets, order[i], order[i + 1]) for i in range(len(order) - 1))


def find_shifted_labeling(K: SimplicialComplex) -> Optional[VertexLabeling]:
    """A labeling under which K is shifted, or None

    Ranks are assigned in increasing order; the next vertex must dominate every
    vertex still unranked. Candidates are tried by decreasing facet incidence.
    """
    n = K.vertex_count
    check_guard("shifted labeling search", n, SEARCH_LIMIT)
    facets = K.facet_masks
    incidence = {v: sum(1 for f in facets if f & bit(v)) for v in range(1, n + 1)}
    candidates = sorted(incidence, key=lambda v: (-incidence[v], v))
    cache: Dict[Tuple[int, int], bool] = {}

    def dom(v: int, w: int) -> bool:
        key = (v, w)
        if key not in cache:
            cache[key] = _dominates(facets, v, w)
        return cache[key]

    order: List[int] = []

    def extend(remaining: List[int]) -> bool:
        if not remaining:
            return True
        for v in remaining:
            rest = [w for w in remaining if w != v]
            if all(dom(v, w) for w in rest):
                order.append(v)
                if extend(rest):
                    return True
                order.pop()
        return False

    if not extend(candidates):
        return None
    labeling = VertexLabeling.from_order(order)
    if not is_shifted_under(K, labeling):
        logger.error("labeling search produced an unverified labeling for %s", K.describe())
        return None
    return labeling


def is_shiftable(K: SimplicialComplex) -> bool:
    """True when some labeling makes K shifted"""
    return find_shifted_labeling(K) is not None


def brute_force_shifted_labeling(K: SimplicialComplex) -> Optional[VertexLabeling]:
    """Reference search over all permutations, checking every face directly"""
    n = K.vertex_count
    check_guard("brute-force labeling search", n, BRUTE_FORCE_LIMIT)
    faces = face_masks(K)
    for order in permutations(range(1, n + 1)):
        rank = {v: k for k, v in enumerate(order)}
        if _shifted_by_faces(faces, rank, n):
            return VertexLabeling.from_order(order)
    return None


def _shifted_by_faces(faces: Set[int], rank: Dict[int, int], n: int) -> bool:
    for face in faces:
        for v in vertices_of(face):
            for w in range(1, n + 1):
                if face & bit(w) or rank[w] >= rank[v]:
                    continue
                if (face & ~bit(v)) | bit(w) not in faces:
                    return False
    return True


def canonical_shifted_form(K: SimplicialComplex) -> Optional[SimplicialComplex]:
    """Relabel K so that it is shifted under the identity, when possible"""
    labeling = find_shifted_labeling(K)
    if labeling is None:
        return None
    return relabel(K, labeling.ranks)


def is_order_ideal(K: SimplicialComplex) -> bool:
    """Whether the faces of K form a down-set of the padded order"""
    check_guard("order ideal test", K.vertex_count, ENUMERATION_LIMIT)
    facets = K.facet_masks
    # a violation, if any, is witnessed by a minimal nonface below some facet
    return not any(
        _padded_leq_masks(x, f) for x in minimal_nonface_masks(K) for f in facets
    )


def _star_masks(faces: Set[int], vb: int, d: int) -> Set[int]:
    return faces | {f | vb for f in faces if popcount(f) <= d}


def star_d(K: SimplicialComplex, v: int, d: int) -> SimplicialComplex:
    """Join a new vertex v to every face with at most d vertices"""
    if d < 1:
        raise StarError(f"star dimension must be at least 1, got {d}")
    if v < 1:
        raise StarError(f"vertex label must be positive, got {v}")
    if K.support_mask & bit(v):
        raise StarError(f"vertex {v} is already a vertex of the complex")
    faces = _star_masks(face_masks(K), bit(v), d)
    return complex_from_masks(max(K.vertex_count, v), faces)


def enumerate_shifted_complexes(
    n: int, max_face_size: Optional[int] = None, limit: int = SHIFTED_ENUMERATION_LIMIT
) -> Iterator[SimplicialComplex]:
    """Every complex on [n] shifted under the identity and using all n vertices

    Walks the padded order in a linear extension and includes an element only
    when everything below it is already included. The output order is fixed.
    """
    check_guard("shifted enumeration", n, limit)
    elements = [
        m
        for m in range(1, full_mask(n) + 1)
        if max_face_size is None or popcount(m) <= max_face_size
    ]
    elements.sort(key=lambda m: (sum(vertices_of(m)), face_sort_key(m)))
    below = {
        m: [x for x in elements if x != m and _padded_leq_masks(x, m)] for m in elements
    }
    singletons = {bit(v) for v in range(1, n + 1)}
    included: Set[int] = set()

    def walk(i: int) -> Iterator[SimplicialComplex]:
        if i == len(elements):
            yield complex_from_masks(n, included)
            return
        m = elements[i]
        allowed = all(x in included for x in below[m])
        if allowed:
            included.add(m)
            yield from walk(i + 1)
            included.discard(m)
        if m not in singletons:
            yield from walk(i + 1)

    yield from walk(0)
