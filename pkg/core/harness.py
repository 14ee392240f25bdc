"""
Exhaustive verification harness
Sweeps every labeled graph or complex at a bound, checks one theorem per
instance and merges shard results into a VerdictReport
"""

import logging
import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple, Union

from .complexes import (
    are_isomorphic,
    dimension,
    f_vector,
    find_isomorphism,
    is_face,
    is_pure,
    minimal_nonfaces,
    one_skeleton,
)
from .config import get_settings
from .ds_string import (
    coloring_from_string,
    encode_threshold,
    evaluate,
    flag_transform,
    is_one_star_per_dimension,
)
from .enumeration import GRAPH_LIMIT, complex_list, graph_at, graph_count
from .errors import EnumerationGuardError, ShiftLabError, UnknownTheoremError
from .graphical import (
    closed_neighborhood_complex,
    dominance_complex,
    edge_complex,
    find_balanced_coloring,
    gen_independence_complex,
    independence_complex,
    is_flag,
    is_pencil,
    neighborhood_complex,
)
from .models import (
    Counterexample,
    Graph,
    SimplicialComplex,
    TheoremId,
    VerdictReport,
)
from .shifted import SHIFTED_ENUMERATION_LIMIT, enumerate_shifted_complexes, find_shifted_labeling
from .subsets import bit, full_mask
from .threshold import creation_sequence, is_threshold

logger = logging.getLogger(__name__)

Outcome = Tuple[Optional[str], Tuple[str, ...]]
ShardResult = Tuple[int, List[Tuple[int, str, str]], Dict[str, int]]

GRAPH_THEOREMS = (TheoremId.T1, TheoremId.T2, TheoremId.T6, TheoremId.T7, TheoremId.T8, TheoremId.HOPE)

COMPLEX_SWEEP_LIMIT = 5

GUARDS = {
    TheoremId.T1: GRAPH_LIMIT,
    TheoremId.T2: GRAPH_LIMIT,
    TheoremId.T3: SHIFTED_ENUMERATION_LIMIT,
    TheoremId.T4: SHIFTED_ENUMERATION_LIMIT,
    TheoremId.T5: COMPLEX_SWEEP_LIMIT,
    TheoremId.T6: GRAPH_LIMIT,
    TheoremId.T7: GRAPH_LIMIT,
    TheoremId.T8: GRAPH_LIMIT,
    TheoremId.HOPE: GRAPH_LIMIT,
}

T4_EDGE_COUNT = 9
T4_TRIANGLE_EDGES = ((1, 2), (1, 3), (2, 3))
K33 = Graph(vertex_count=6, edges=[(u, v) for u in (1, 2, 3) for v in (4, 5, 6)])


def _graph_outcome(passed: bool, detail: str, tallies: Tuple[str, ...] = ()) -> Outcome:
    return (None if passed else detail), tallies


def check_t1(G: Graph, bound: int) -> Outcome:
    """I(G) has a shifted labeling iff G is threshold"""
    threshold = is_threshold(G)
    shifted = find_shifted_labeling(independence_complex(G)) is not None
    tallies = ("threshold",) if threshold else ()
    return _graph_outcome(
        shifted == threshold, f"I(G) shifted={shifted}, threshold={threshold}", tallies
    )


def check_t2(G: Graph, bound: int) -> Outcome:
    """For threshold G, I(G) is flag and the flag transform rebuilds it"""
    if not is_threshold(G):
        return None, ()
    tallies = ("threshold",)
    I = independence_complex(G)
    if not is_flag(I):
        return "I(G) is not flag", tallies
    image = flag_transform(encode_threshold(G))
    if not is_one_star_per_dimension(image):
        return f"{image.render()} has more than one star in some dimension", tallies
    if not are_isomorphic(evaluate(image), I):
        return f"evaluate({image.render()}) is not isomorphic to I(G)", tallies
    return None, tallies


def _complement_of_skeleton(K: SimplicialComplex) -> Graph:
    n = K.vertex_count
    adj = one_skeleton(K).adjacency()
    return Graph.from_adjacency(n, [full_mask(n) & ~adj[v - 1] & ~bit(v) for v in range(1, n + 1)])


def constructive_coloring_failure(K: SimplicialComplex) -> Optional[str]:
    """Color a flag complex from its construction string, or say why that fails

    K is the independence complex of the complement of its 1-skeleton; that
    graph's string goes through the flag transform and its block coloring is
    carried back to K along an isomorphism.
    """
    sequence = creation_sequence(_complement_of_skeleton(K))
    if sequence is None:
        return "complement of the 1-skeleton is not threshold"
    image = flag_transform(sequence.to_ds_string())
    phi = find_isomorphism(evaluate(image), K)
    if phi is None:
        return f"evaluate({image.render()}) is not isomorphic to the complex"
    try:
        coloring = coloring_from_string(image)
    except ShiftLabError as e:
        return str(e)
    colors = {phi[v]: c for v, c in coloring.colors.items()}
    if coloring.color_count != dimension(K) + 1:
        return f"string coloring uses {coloring.color_count} colors, dimension is {dimension(K)}"
    for facet in K.facets:
        if len({colors[v] for v in facet}) != len(facet):
            return f"facet {facet} is not rainbow under the string coloring"
    return None


def check_t3(K: SimplicialComplex, bound: int) -> Outcome:
    """Pure shifted: balanced iff flag iff pencil; shifted flag: colorable from the string"""
    tallies: List[str] = []
    flag = is_flag(K)
    if is_pure(K):
        tallies.append("pure")
        balanced = find_balanced_coloring(K) is not None
        pencil = is_pencil(K)
        if not balanced == flag == pencil:
            return f"balanced={balanced}, flag={flag}, pencil={pencil}", tuple(tallies)
    if flag:
        tallies.append("flag")
        failure = constructive_coloring_failure(K)
        if failure is not None:
            return failure, tuple(tallies)
    return None, tuple(tallies)


def check_t4(K: SimplicialComplex, bound: int) -> Outcome:
    """Shifted graphs with the target f-vector contain the triangle 123; K33 is flag and balanced"""
    if K == _k33_complex():
        fv = f_vector(K)
        flag = is_flag(K)
        balanced = find_balanced_coloring(K) is not None
        if fv != (6, 9) or not flag or not balanced:
            return f"K33: f-vector={fv}, flag={flag}, balanced={balanced}", ("k33",)
        return None, ("k33",)
    if f_vector(K) != (bound, T4_EDGE_COUNT):
        return None, ()
    tallies = ("f_vector_match",)
    missing = [e for e in T4_TRIANGLE_EDGES if not is_face(K, e)]
    if missing:
        return f"missing edges {missing}", tallies
    if find_balanced_coloring(K) is not None:
        return "balanced although it contains a triangle", tallies
    if (1, 2, 3) not in minimal_nonfaces(K):
        return "123 is not a minimal nonface", tallies
    return None, tallies


def check_t5(K: SimplicialComplex, bound: int) -> Outcome:
    """For pure K: K shiftable iff its generalized independence complex is"""
    if not is_pure(K):
        return None, ()
    shifted = find_shifted_labeling(K) is not None
    dual_shifted = find_shifted_labeling(gen_independence_complex(K)) is not None
    tallies = ("pure", "shifted") if shifted else ("pure",)
    if shifted != dual_shifted:
        return f"K shifted={shifted}, I(K) shifted={dual_shifted}", tallies
    return None, tallies


def check_t6(G: Graph, bound: int) -> Outcome:
    """N(G) is contained in D(G)"""
    dominance = dominance_complex(G)
    outside = [f for f in neighborhood_complex(G).facets if not is_face(dominance, f)]
    return _graph_outcome(not outside, f"faces of N(G) outside D(G): {outside}")


def check_t7(G: Graph, bound: int) -> Outcome:
    """N(G) = D(G) iff G is threshold"""
    equal = neighborhood_complex(G) == dominance_complex(G)
    threshold = is_threshold(G)
    tallies = ("threshold",) if threshold else ()
    return _graph_outcome(equal == threshold, f"N(G)=D(G) is {equal}, threshold={threshold}", tallies)


def check_t8(G: Graph, bound: int) -> Outcome:
    """D(G) is the generalized independence complex of N[G]"""
    dominance = dominance_complex(G)
    rebuilt = gen_independence_complex(closed_neighborhood_complex(G))
    return _graph_outcome(
        dominance == rebuilt, f"D(G)={list(dominance.facets)}, I(N[G])={list(rebuilt.facets)}"
    )


def check_hope(G: Graph, bound: int) -> Outcome:
    """Witness when threshold disagrees with N[G] shifted or with D(G) shifted"""
    threshold = is_threshold(G)
    closed_shifted = find_shifted_labeling(closed_neighborhood_complex(G)) is not None
    dominance_shifted = find_shifted_labeling(dominance_complex(G)) is not None
    tallies = tuple(
        name
        for name, flag in (
            ("threshold", threshold),
            ("closed_neighborhood_shifted", closed_shifted),
            ("dominance_shifted", dominance_shifted),
        )
        if flag
    )
    if threshold == closed_shifted == dominance_shifted:
        return None, tallies
    return (
        f"threshold={threshold}, N[G] shifted={closed_shifted}, D(G) shifted={dominance_shifted}",
        tallies,
    )


CHECKERS: Dict[TheoremId, Callable[[object, int], Outcome]] = {
    TheoremId.T1: check_t1,
    TheoremId.T2: check_t2,
    TheoremId.T3: check_t3,
    TheoremId.T4: check_t4,
    TheoremId.T5: check_t5,
    TheoremId.T6: check_t6,
    TheoremId.T7: check_t7,
    TheoremId.T8: check_t8,
    TheoremId.HOPE: check_hope,
}


@lru_cache(maxsize=1)
def _k33_complex() -> SimplicialComplex:
    return edge_complex(K33)


@lru_cache(maxsize=8)
def _complex_instances(theorem: TheoremId, bound: int, limit: int) -> Tuple[SimplicialComplex, ...]:
    if theorem is TheoremId.T3:
        return tuple(
            K for m in range(1, bound + 1) for K in enumerate_shifted_complexes(m, limit=limit)
        )
    if theorem is TheoremId.T4:
        graphs = tuple(enumerate_shifted_complexes(bound, max_face_size=2, limit=limit))
        return graphs + (_k33_complex(),)
    return tuple(complex_list(bound, limit=limit))


def instance_count(theorem: TheoremId, bound: int, limit: Optional[int] = None) -> int:
    """Number of instances a sweep of theorem at bound checks"""
    if theorem in GRAPH_THEOREMS:
        return graph_count(bound)
    return len(_complex_instances(theorem, bound, limit or GUARDS[theorem]))


def _instance(theorem: TheoremId, bound: int, index: int, limit: int) -> Union[Graph, SimplicialComplex]:
    if theorem in GRAPH_THEOREMS:
        return graph_at(bound, index)
    return _complex_instances(theorem, bound, limit)[index]


def check_range(
    theorem: str,
    bound: int,
    start: int,
    stop: int,
    first_only: bool = False,
    limit: Optional[int] = None,
) -> ShardResult:
    """Worker: check instances start..stop-1 and return (checked, counterexamples, tallies)"""
    theorem_id = TheoremId(theorem)
    checker = CHECKERS[theorem_id]
    limit = limit or GUARDS[theorem_id]
    checked = 0
    found: List[Tuple[int, str, str]] = []
    tallies: Counter = Counter()
    for index in range(start, stop):
        instance = _instance(theorem_id, bound, index, limit)
        detail, keys = checker(instance, bound)
        checked += 1
        tallies.update(keys)
        if detail is not None:
            found.append((index, instance.describe(), detail))
            if first_only:
                break
    return checked, found, dict(tallies)


def _shards(total: int, jobs: int) -> List[Tuple[int, int]]:
    pieces = 1 if jobs == 1 else jobs * 4
    size = max(1, -(-total // pieces))
    return [(start, min(start + size, total)) for start in range(0, total, size)]


def _default_bound(theorem: TheoremId) -> int:
    settings = get_settings()
    if theorem is TheoremId.HOPE:
        return settings.hope_bound
    if theorem in GRAPH_THEOREMS:
        return settings.graph_bound
    if theorem is TheoremId.T5:
        return settings.complex_bound
    return settings.shifted_bound


def resolve_theorem(theorem: Union[str, TheoremId]) -> TheoremId:
    """TheoremId from an id or its text form"""
    if isinstance(theorem, TheoremId):
        return theorem
    try:
        return TheoremId.parse(theorem)
    except ValueError:
        raise UnknownTheoremError(f"unknown theorem id: {theorem}") from None


def run_theorem(
    theorem: Union[str, TheoremId],
    bound: Optional[int] = None,
    jobs: Optional[int] = None,
    first_counterexample: bool = False,
    allow_large: bool = False,
) -> VerdictReport:
    """Sweep every instance of a theorem at the bound and report counterexamples

    jobs=0 means one worker per CPU. Shards are merged in index order, so the
    report does not depend on the worker count unless first_counterexample
    stops shards early.
    """
    theorem_id = resolve_theorem(theorem)
    if theorem_id is TheoremId.GOLDEN:
        from .golden import golden_examples

        return golden_examples()

    bound = _default_bound(theorem_id) if bound is None else bound
    if bound < 1:
        raise ValueError(f"bound must be at least 1, got {bound}")
    jobs = get_settings().jobs if jobs is None else jobs
    jobs = jobs or os.cpu_count() or 1

    limit = GUARDS[theorem_id]
    if bound > limit:
        if not allow_large:
            raise EnumerationGuardError(f"{theorem_id.value} sweep", bound, limit)
        logger.warning("%s: bound %d exceeds the guard %d", theorem_id.value, bound, limit)
        limit = bound

    started = time.perf_counter()
    total = instance_count(theorem_id, bound, limit)
    shards = _shards(total, jobs)
    logger.info("%s n=%d: %d instances in %d shards on %d workers",
                theorem_id.value, bound, total, len(shards), jobs)

    results: List[ShardResult] = []
    if jobs == 1:
        for start, stop in shards:
            result = check_range(theorem_id.value, bound, start, stop, first_counterexample, limit)
            results.append(result)
            if first_counterexample and result[1]:
                break
    else:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            futures = [
                executor.submit(
                    check_range, theorem_id.value, bound, start, stop, first_counterexample, limit
                )
                for start, stop in shards
            ]
            results = [future.result() for future in futures]

    report = _merge(theorem_id, bound, jobs, results, first_counterexample)
    report.elapsed_ms = round((time.perf_counter() - started) * 1000, 3)
    logger.info("%s n=%d: checked %d, %d counterexamples",
                theorem_id.value, bound, report.checked, len(report.counterexamples))
    return report


def _merge(
    theorem: TheoremId, bound: int, jobs: int, results: List[ShardResult], first_only: bool
) -> VerdictReport:
    checked = 0
    found: List[Tuple[int, str, str]] = []
    tallies: Counter = Counter()
    for shard_checked, shard_found, shard_tallies in results:
        checked += shard_checked
        found.extend(shard_found)
        tallies.update(shard_tallies)
    found.sort()
    if first_only:
        found = found[:1]
    return VerdictReport(
        theorem=theorem,
        bound=bound,
        checked=checked,
        counterexamples=[Counterexample(index=i, input=text, detail=detail) for i, text, detail in found],
        tallies=dict(sorted(tallies.items())),
        jobs=jobs,
    )


def run_hope_search(bound: Optional[int] = None, jobs: Optional[int] = None) -> VerdictReport:
    """Every graph where threshold disagrees with N[G] or D(G) being shiftable"""
    return run_theorem(TheoremId.HOPE, bound=bound, jobs=jobs)
