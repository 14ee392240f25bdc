"""
Core operations on simplicial complexes
Construction, face queries, f-vectors, minimal nonfaces, skeletons and isomorphism
"""

import logging
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Set

from .errors import EnumerationGuardError
from .models import Face, FVector, Graph, SimplicialComplex
from .subsets import (
    bit,
    face_sort_key,
    full_mask,
    is_submask,
    iter_submasks,
    mask_of,
    popcount,
    vertices_of,
)

logger = logging.getLogger(__name__)

ENUMERATION_LIMIT = 25
ISOMORPHISM_LIMIT = 9


def check_guard(what: str, n: int, limit: int) -> None:
    """Raise EnumerationGuardError when n exceeds limit"""
    if n > limit:
        raise EnumerationGuardError(what, n, limit)


def complex_from_facets(faces: Iterable[Sequence[int]], n: int) -> SimplicialComplex:
    """Build a complex on [n] from any collection of faces

    Faces are closed downward implicitly; only the inclusion-maximal ones are
    kept. Raises ValueError for n < 1 or a label outside 1..n.
    """
    if n < 1:
        raise ValueError(f"vertex count must be at least 1, got {n}")
    faces = [tuple(f) for f in faces]
    for face in faces:
        for v in face:
            if v < 1 or v > n:
                raise ValueError(f"vertex {v} out of range 1..{n}")
    return SimplicialComplex(vertex_count=n, facets=faces)


def complex_from_masks(n: int, masks: Iterable[int]) -> SimplicialComplex:
    """Complex on n vertices from face masks that need not be maximal"""
    return SimplicialComplex.from_masks(n, masks)


def simplex(n: int) -> SimplicialComplex:
    """The full simplex on [n]"""
    return complex_from_masks(n, [full_mask(n)])


def is_face(K: SimplicialComplex, face: Iterable[int]) -> bool:
    """True when face lies inside some facet; the empty face always does"""
    return _is_face_mask(K.facet_masks, mask_of(face))


def _is_face_mask(facet_masks: Sequence[int], mask: int) -> bool:
    if mask == 0:
        return True
    return any(is_submask(mask, f) for f in facet_masks)


def face_masks(K: SimplicialComplex) -> Set[int]:
    """Every face as a mask, the empty face included"""
    check_guard("face enumeration", K.vertex_count, ENUMERATION_LIMIT)
    faces: Set[int] = {0}
    for facet in K.facet_masks:
        if facet not in faces:
            faces.update(iter_submasks(facet))
    return faces


def all_faces(K: SimplicialComplex) -> List[Face]:
    """Every face, the empty face first, in (size, lexicographic) order"""
    return [vertices_of(m) for m in sorted(face_masks(K), key=face_sort_key)]


def dimension(K: SimplicialComplex) -> int:
    """Largest facet size minus one; -1 when only the empty face is present"""
    return max((len(f) for f in K.facets), default=0) - 1


def f_vector(K: SimplicialComplex) -> FVector:
    """(f_0, ..., f_d) where f_i counts faces with i+1 vertices"""
    counts = [0] * (dimension(K) + 1)
    for m in face_masks(K):
        if m:
            counts[popcount(m) - 1] += 1
    return tuple(counts)


def minimal_nonface_masks(K: SimplicialComplex) -> List[int]:
    """Masks of the inclusion-minimal subsets of 1..n that are not faces"""
    check_guard("minimal nonfaces", K.vertex_count, ENUMERATION_LIMIT)
    facets = K.facet_masks
    faces = face_masks(K)
    found = []
    for mask in range(1, full_mask(K.vertex_count) + 1):
        if mask in faces:
            continue
        # a nonface is minimal when each of its codimension-one subsets is a face
        rest = mask
        minimal = True
        while rest:
            low = rest & -rest
            rest ^= low
            if not _is_face_mask(facets, mask ^ low):
                minimal = False
                break
        if minimal:
            found.append(mask)
    return sorted(found, key=face_sort_key)


def minimal_nonfaces(K: SimplicialComplex) -> List[Face]:
    """Minimal nonfaces as sorted tuples in face order"""
    return [vertices_of(m) for m in minimal_nonface_masks(K)]


def is_pure(K: SimplicialComplex) -> bool:
    """True when every facet has the same size"""
    return len({len(f) for f in K.facets}) <= 1


def one_skeleton(K: SimplicialComplex) -> Graph:
    """Graph of the edges of K on the same vertex count"""
    edges = set()
    for facet in K.facets:
        edges.update(combinations(facet, 2))
    return Graph(vertex_count=K.vertex_count, edges=sorted(edges))


def induced_subcomplex(K: SimplicialComplex, vertices: Iterable[int]) -> SimplicialComplex:
    """Faces of K inside the given vertex set; labels are kept, other vertices become ghosts"""
    keep = mask_of(vertices)
    return complex_from_masks(K.vertex_count, [f & keep for f in K.facet_masks])


def cone(K: SimplicialComplex, apex: Optional[int] = None) -> SimplicialComplex:
    """Join with a new apex vertex, by default vertex_count + 1"""
    apex = K.vertex_count + 1 if apex is None else apex
    if K.support_mask & bit(apex):
        raise ValueError(f"apex {apex} is already a vertex of the complex")
    n = max(K.vertex_count, apex)
    masks = [f | bit(apex) for f in K.facet_masks] or [bit(apex)]
    return complex_from_masks(n, masks)


def relabel(K: SimplicialComplex, mapping: Mapping[int, int]) -> SimplicialComplex:
    """Image of K under a bijection of 1..n"""
    n = K.vertex_count
    if sorted(mapping) != list(range(1, n + 1)) or sorted(mapping.values()) != list(range(1, n + 1)):
        raise ValueError("relabel mapping must be a permutation of 1..n")
    return complex_from_masks(n, [mask_of(mapping[v] for v in f) for f in K.facets])


def _vertex_signatures(K: SimplicialComplex) -> Dict[int, tuple]:
    signature = {}
    for v in range(1, K.vertex_count + 1):
        sizes = sorted(len(f) for f in K.facets if v in f)
        signature[v] = (len(sizes) == 0, tuple(sizes))
    return signature


def find_isomorphism(K1: SimplicialComplex, K2: SimplicialComplex) -> Optional[Dict[int, int]]:
    """A vertex bijection carrying K1 onto K2, or None"""
    n = K1.vertex_count
    if n != K2.vertex_count:
        return None
    if sorted(len(f) for f in K1.facets) != sorted(len(f) for f in K2.facets):
        return None
    check_guard("isomorphism search", n, ISOMORPHISM_LIMIT)

    sig1 = _vertex_signatures(K1)
    sig2 = _vertex_signatures(K2)
    if sorted(sig1.values()) != sorted(sig2.values()):
        return None

    adj1 = one_skeleton(K1).adjacency()
    adj2 = one_skeleton(K2).adjacency()
    classes: Dict[tuple, List[int]] = {}
    for w, s in sig2.items():
        classes.setdefault(s, []).append(w)
    order = sorted(sig1, key=lambda v: (len(classes[sig1[v]]), v))
    targets = set(K2.facet_masks)
    mapping: Dict[int, int] = {}
    used: Set[int] = set()

    def extend(k: int) -> bool:
        if k == len(order):
            image = {mask_of(mapping[v] for v in f) for f in K1.facets}
            return image == targets
        v = order[k]
        for w in classes[sig1[v]]:
            if w in used:
                continue
            if any(
                bool(adj1[v - 1] & bit(u)) != bool(adj2[w - 1] & bit(mapping[u]))
                for u in mapping
            ):
                continue
            mapping[v] = w
            used.add(w)
            if extend(k + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    if extend(0):
        return dict(sorted(mapping.items()))
    return None


def are_isomorphic(K1: SimplicialComplex, K2: SimplicialComplex) -> bool:
    """True when some relabeling maps K1 onto K2"""
    return find_isomorphism(K1, K2) is not None
