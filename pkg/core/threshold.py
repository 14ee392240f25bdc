"""
Threshold graphs
Recognition by isolated/dominating vertex elimination, weight certificates
and the cross-check against shifted 1-complexes
"""

import logging
from typing import List, Optional, Tuple

from .complexes import check_guard
from .errors import ConsistencyError, NotThresholdError
from .graphical import edge_complex
from .models import CreationSequence, DsKind, Graph, ThresholdCertificate
from .shifted import find_shifted_labeling
from .subsets import bit, full_mask, vertices_of

logger = logging.getLogger(__name__)

CERTIFICATE_LIMIT = 20
CROSS_CHECK_LIMIT = 8


def _eliminate(G: Graph) -> Tuple[List[Tuple[int, DsKind]], int]:
    """Peel isolated vertices first, then the smallest dominating vertex

    Returns the removals in order and the mask of vertices left when stuck.
    """
    adj = G.adjacency()
    alive = full_mask(G.vertex_count)
    removed: List[Tuple[int, DsKind]] = []
    while alive:
        alive_vertices = vertices_of(alive)
        isolated = [v for v in alive_vertices if not adj[v - 1] & alive]
        if isolated:
            for v in isolated:
                removed.append((v, DsKind.DISJOINT))
                alive &= ~bit(v)
            continue
        dominating = [
            v for v in alive_vertices if adj[v - 1] & alive == alive & ~bit(v)
        ]
        if not dominating:
            break
        v = dominating[0]
        removed.append((v, DsKind.STAR))
        alive &= ~bit(v)
    return removed, alive


def creation_sequence(G: Graph) -> Optional[CreationSequence]:
    """Creation order of a threshold graph, or None when G is not threshold"""
    removed, stuck = _eliminate(G)
    if stuck:
        logger.debug("elimination stuck on %s for %s", vertices_of(stuck), G.describe())
        return None
    removed.reverse()
    return CreationSequence(
        steps=tuple(kind for _, kind in removed),
        vertices=tuple(v for v, _ in removed),
    )


def stuck_vertices(G: Graph) -> Tuple[int, ...]:
    """Vertices of the subgraph on which elimination gets stuck; empty when threshold"""
    return vertices_of(_eliminate(G)[1])


def is_threshold(G: Graph) -> bool:
    """True when elimination removes every vertex"""
    return creation_sequence(G) is not None


def certify(G: Graph) -> ThresholdCertificate:
    """Weights and threshold witnessing that G is threshold

    With m disjoint steps, the j-th disjoint vertex gets 2^(m-j) and the
    threshold is 2^m - 1; a star vertex gets the threshold minus the weights
    of the disjoint vertices created after it.
    """
    sequence = creation_sequence(G)
    if sequence is None:
        raise NotThresholdError(stuck_vertices(G))
    steps = list(zip(sequence.steps, sequence.vertices))
    m = sum(1 for step, _ in steps if step is DsKind.DISJOINT)
    threshold = 2 ** m - 1
    weights = {}
    j = 0
    for step, v in steps:
        if step is DsKind.DISJOINT:
            j += 1
            weights[v] = 2 ** (m - j)
    later = 0
    for step, v in reversed(steps):
        if step is DsKind.DISJOINT:
            later += weights[v]
        else:
            weights[v] = threshold - later
    return ThresholdCertificate(weights=dict(sorted(weights.items())), threshold=threshold)


def verify_certificate(G: Graph, certificate: ThresholdCertificate) -> bool:
    """Exhaustively check: S independent iff its weight is at most the threshold"""
    n = G.vertex_count
    check_guard("certificate verification", n, CERTIFICATE_LIMIT)
    if set(certificate.weights) != set(range(1, n + 1)):
        logger.debug("certificate weights do not cover 1..%d", n)
        return False
    adj = G.adjacency()
    weight = [0] * (1 << n)
    independent = [True] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        v = low.bit_length()
        rest = mask ^ low
        weight[mask] = weight[rest] + certificate.weights[v]
        independent[mask] = independent[rest] and not adj[v - 1] & rest
        if independent[mask] != (weight[mask] <= certificate.threshold):
            return False
    return certificate.threshold >= 0


def threshold_equals_shifted_graph(G: Graph) -> bool:
    """Recognize G both as threshold and as a shiftable 1-complex; the answers must agree"""
    check_guard("threshold cross-check", G.vertex_count, CROSS_CHECK_LIMIT)
    by_elimination = is_threshold(G)
    by_shifting = find_shifted_labeling(edge_complex(G)) is not None
    if by_elimination != by_shifting:
        raise ConsistencyError(
            f"{G.describe()}: elimination says {by_elimination}, shifting says {by_shifting}"
        )
    return by_elimination
