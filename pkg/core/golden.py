"""
Golden replays of the worked examples
Each replay recomputes a known example and reports a mismatch as a counterexample
"""

import logging
import time
from typing import Callable, List, Optional, Tuple

from .complexes import (
    all_faces,
    are_isomorphic,
    complex_from_facets,
    f_vector,
    is_face,
    is_pure,
    induced_subcomplex,
    minimal_nonfaces,
    one_skeleton,
    relabel,
)
from .ds_string import (
    canonicalize,
    enumerate_canonical_strings,
    evaluate,
    flag_transform,
    label_from_string,
    parse_ds,
)
from .errors import DsParseError, ShiftLabError
from .graphical import (
    edge_complex,
    find_balanced_coloring,
    gen_independence_complex,
    is_flag,
    is_pencil,
)
from .models import Counterexample, Graph, SimplicialComplex, TheoremId, VerdictReport, VertexLabeling
from .shifted import (
    find_shifted_labeling,
    is_order_ideal,
    is_shifted_under,
    padded_less_or_equal,
    star_d,
)

logger = logging.getLogger(__name__)

Replay = Callable[[], Optional[str]]
REPLAYS: List[Tuple[str, Replay]] = []


def replay(name: str) -> Callable[[Replay], Replay]:
    """Register a replay under name"""

    def register(fn: Replay) -> Replay:
        REPLAYS.append((name, fn))
        return fn

    return register


def _expect(label: str, actual, expected) -> Optional[str]:
    if actual != expected:
        return f"{label}: expected {expected!r}, got {actual!r}"
    return None


def _first(*results: Optional[str]) -> Optional[str]:
    return next((r for r in results if r is not None), None)


def example_complex() -> SimplicialComplex:
    """Shifted complex with facets 123, 14, 24"""
    return complex_from_facets([(1, 2, 3), (1, 4), (2, 4)], 4)


def independence_chain() -> List[SimplicialComplex]:
    """K, I(K), I(I(K)), I(I(I(K))) for the non-pure counterexample"""
    chain = [complex_from_facets([(1, 2, 3), (1, 4), (2, 4), (1, 5)], 5)]
    for _ in range(3):
        chain.append(gen_independence_complex(chain[-1]))
    return chain


@replay("complex_from_facets drops non-maximal faces")
def _facet_reduction() -> Optional[str]:
    K = complex_from_facets([(1, 2, 3), (1, 2), (1, 4), (2, 4)], 4)
    return _expect("facets", K.facets, ((1, 4), (2, 4), (1, 2, 3)))


@replay("shifted example complex: faces")
def _example_faces() -> Optional[str]:
    K = example_complex()
    return _first(
        _expect("is_face 14", is_face(K, (1, 4)), True),
        _expect("is_face 34", is_face(K, (3, 4)), False),
        _expect("face count", len(all_faces(K)), 11),
        _expect("f-vector", f_vector(K), (4, 5, 1)),
        _expect("minimal nonfaces", minimal_nonfaces(K), [(3, 4), (1, 2, 4)]),
    )


@replay("shifted example complex: properties")
def _example_properties() -> Optional[str]:
    K = example_complex()
    return _first(
        _expect("pure", is_pure(K), False),
        _expect("shifted under identity", is_shifted_under(K, VertexLabeling.identity(4)), True),
        _expect("order ideal", is_order_ideal(K), True),
        _expect("flag", is_flag(K), False),
        _expect("balanced", find_balanced_coloring(K) is not None, True),
        _expect("pencil", is_pencil(K), False),
    )


@replay("shifted example complex is not built by any string on 4 vertices")
def _example_not_a_string() -> Optional[str]:
    K = example_complex()
    for s in enumerate_canonical_strings(4):
        if are_isomorphic(evaluate(s), K):
            return f"{s.render()} evaluates to the complex"
    return None


@replay("independence chain: I(K)")
def _chain_first() -> Optional[str]:
    K, I1, _, _ = independence_chain()
    return _first(
        _expect("K shifted", is_shifted_under(K, VertexLabeling.identity(5)), True),
        _expect("I(K) facets", I1.facets, ((1, 2), (1, 3), (2, 3, 5), (3, 4, 5))),
        _expect("minimal nonfaces of I(K)", minimal_nonfaces(I1), list(K.facets)),
        _expect("I(K) shiftable", find_shifted_labeling(I1) is not None, False),
        _expect(
            "1-skeleton of I(K) on 1245",
            one_skeleton(induced_subcomplex(I1, (1, 2, 4, 5))).edges,
            ((1, 2), (2, 5), (4, 5)),
        ),
    )


@replay("independence chain: I(I(K)) and I(I(I(K)))")
def _chain_rest() -> Optional[str]:
    _, _, I2, I3 = independence_chain()
    swap = VertexLabeling(ranks={1: 1, 2: 2, 3: 4, 4: 3, 5: 5})
    return _first(
        _expect("I^2 facets", I2.facets, ((3, 5), (1, 4, 5), (2, 3, 4), (2, 4, 5))),
        _expect("I^2 shiftable", find_shifted_labeling(I2) is not None, False),
        _expect(
            "I^3 facets", I3.facets, ((4, 5), (1, 2, 3), (1, 2, 4), (1, 2, 5), (1, 3, 4))
        ),
        _expect("I^3 shifted under identity", is_shifted_under(I3, VertexLabeling.identity(5)), False),
        _expect("I^3 shifted after swapping 3 and 4", is_shifted_under(I3, swap), True),
        _expect("I^3 relabeled is an order ideal", is_order_ideal(relabel(I3, swap.ranks)), True),
    )


@replay("star_d on a triangle")
def _stars() -> Optional[str]:
    triangle = complex_from_facets([(1, 2, 3)], 4)
    point = complex_from_facets([(1,)], 1)
    return _first(
        _expect(
            "star_2", star_d(triangle, 4, 2).facets, ((1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4))
        ),
        _expect("star_3", star_d(triangle, 4, 3).facets, ((1, 2, 3, 4),)),
        _expect("star_1 onto a point", star_d(point, 2, 1).facets, ((1, 2),)),
    )


@replay("padded order")
def _padded() -> Optional[str]:
    return _first(
        _expect("24 <= 1356", padded_less_or_equal((2, 4), (1, 3, 5, 6)), True),
        _expect("14 <= 24", padded_less_or_equal((1, 4), (2, 4)), True),
        _expect("24 <= 14", padded_less_or_equal((2, 4), (1, 4)), False),
    )


@replay("construction string DDSS|SSD|S")
def _example_string() -> Optional[str]:
    s = parse_ds("DDSS|SSD|S")
    labels = label_from_string(s)
    K = evaluate(s)
    return _first(
        _expect("token count", len(s.tokens), 10),
        _expect("bars", s.bar_count, 2),
        _expect("canonical", canonicalize(s).render(), "DDSS|SSD|S"),
        _expect("equivalent form", canonicalize(parse_ds("DDSS|SS|DS")).render(), "DDSS|SSD|S"),
        _expect("labels", tuple(labels.rank(i) for i in range(1, 9)), (6, 7, 5, 4, 3, 2, 8, 1)),
        _expect("shifted under identity", is_shifted_under(K, VertexLabeling.identity(8)), True),
    )


@replay("bar must precede a star")
def _bad_bar() -> Optional[str]:
    try:
        parse_ds("DD|D")
    except DsParseError:
        return None
    return "DD|D parsed without error"


@replay("flag transform")
def _flag_transform() -> Optional[str]:
    image = flag_transform(parse_ds("DDSDSDSSD"))
    return _expect("image", image.render(), "S|SD|SD|SDD|S")


@replay("pencil string")
def _pencil() -> Optional[str]:
    K = evaluate(parse_ds("DDDS|S"))
    return _first(
        _expect("pencil", is_pencil(K), True),
        _expect("flag", is_flag(K), True),
    )


@replay("K33 is flag and balanced")
def _k33() -> Optional[str]:
    K = edge_complex(Graph(vertex_count=6, edges=[(u, v) for u in (1, 2, 3) for v in (4, 5, 6)]))
    return _first(
        _expect("f-vector", f_vector(K), (6, 9)),
        _expect("flag", is_flag(K), True),
        _expect("balanced", find_balanced_coloring(K) is not None, True),
    )


@replay("path obstructions")
def _paths() -> Optional[str]:
    p4 = edge_complex(Graph(vertex_count=4, edges=[(1, 2), (2, 3), (3, 4)]))
    return _expect("P4 shiftable", find_shifted_labeling(p4) is not None, False)


def golden_examples() -> VerdictReport:
    """Replay every worked example; any mismatch becomes a counterexample"""
    started = time.perf_counter()
    failures = []
    for index, (name, fn) in enumerate(REPLAYS):
        try:
            detail = fn()
        except ShiftLabError as e:
            detail = f"raised {type(e).__name__}: {e}"
        if detail is not None:
            logger.warning("golden replay failed: %s: %s", name, detail)
            failures.append(Counterexample(index=index, input=name, detail=detail))
    return VerdictReport(
        theorem=TheoremId.GOLDEN,
        bound=0,
        checked=len(REPLAYS),
        counterexamples=failures,
        elapsed_ms=round((time.perf_counter() - started) * 1000, 3),
    )
