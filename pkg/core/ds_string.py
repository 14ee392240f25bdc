"""
Construction strings over D, S and the dimension bar
Parsing, canonical form, labels, evaluation to a complex, the flag transform
and the coloring read off a one-star-per-dimension string
"""

import logging
from typing import Dict, Iterator, List, Optional

from .complexes import complex_from_masks
from .errors import DsParseError, DsTransformError, NotThresholdError
from .models import (
    BalancedColoring,
    DsKind,
    DsString,
    Graph,
    SimplicialComplex,
    VertexLabeling,
)
from .shifted import _star_masks
from .subsets import bit
from .threshold import creation_sequence, stuck_vertices

logger = logging.getLogger(__name__)

_ALPHABET = {kind.value: kind for kind in DsKind}

NAMING_LABELS = "labels"
NAMING_CHRONOLOGICAL = "chronological"


def parse_ds(text: str) -> DsString:
    """Parse a string such as "DDSS|SSD|S"; whitespace is ignored

    Every run of bars must be followed, possibly after some D tokens, by an S.
    """
    tokens: List[DsKind] = []
    open_bar = None
    for position, ch in enumerate(text):
        if ch.isspace():
            continue
        kind = _ALPHABET.get(ch.upper())
        if kind is None:
            raise DsParseError(f"illegal character {ch!r}", position)
        if kind is DsKind.BAR:
            if open_bar is None:
                open_bar = position
        elif kind is DsKind.STAR:
            open_bar = None
        tokens.append(kind)
    if not tokens:
        raise DsParseError("empty construction string", 0)
    if open_bar is not None:
        raise DsParseError("bar is not followed by an S", open_bar)
    return DsString(tokens=tuple(tokens))


def render(s: DsString) -> str:
    """Text form of a string"""
    return s.render()


def canonicalize(s: DsString) -> DsString:
    """First vertex token becomes D and every D moves left past adjacent bars"""
    tokens = list(s.tokens)
    for i, t in enumerate(tokens):
        if t is not DsKind.BAR:
            tokens[i] = DsKind.DISJOINT
            break
    moved = True
    while moved:
        moved = False
        for i in range(len(tokens) - 1):
            if tokens[i] is DsKind.BAR and tokens[i + 1] is DsKind.DISJOINT:
                tokens[i], tokens[i + 1] = DsKind.DISJOINT, DsKind.BAR
                moved = True
    return DsString(tokens=tuple(tokens))


def label_from_string(s: DsString) -> VertexLabeling:
    """Map the i-th created vertex to its label

    S vertices take 1..k from right to left, D vertices take k+1..n from left to right.
    """
    kinds = [t for t in s.tokens if t is not DsKind.BAR]
    stars = [i for i, t in enumerate(kinds, start=1) if t is DsKind.STAR]
    disjoint = [i for i, t in enumerate(kinds, start=1) if t is DsKind.DISJOINT]
    ranks: Dict[int, int] = {}
    for label, i in enumerate(reversed(stars), start=1):
        ranks[i] = label
    for label, i in enumerate(disjoint, start=len(stars) + 1):
        ranks[i] = label
    return VertexLabeling(ranks=ranks)


def evaluate(s: DsString, naming: str = NAMING_LABELS) -> SimplicialComplex:
    """Build the complex of a string, left to right

    D adds an isolated vertex, a bar raises the star dimension (starting at 1)
    and S joins the new vertex to every face with at most that many vertices.
    New vertices are named by label_from_string unless naming is chronological.
    """
    if naming not in (NAMING_LABELS, NAMING_CHRONOLOGICAL):
        raise ValueError(f"unknown naming {naming!r}")
    labels = label_from_string(s)
    faces = {0}
    d = 1
    created = 0
    for token in s.tokens:
        if token is DsKind.BAR:
            d += 1
            continue
        created += 1
        name = labels.rank(created) if naming == NAMING_LABELS else created
        if token is DsKind.DISJOINT:
            faces.add(bit(name))
        else:
            faces = _star_masks(faces, bit(name), d)
    return complex_from_masks(max(created, 1), faces)


def encode_threshold(G: Graph) -> DsString:
    """Construction string (no bars) of a threshold graph"""
    sequence = creation_sequence(G)
    if sequence is None:
        raise NotThresholdError(stuck_vertices(G))
    return sequence.to_ds_string()


def flag_transform(s: DsString) -> DsString:
    """Replace D by "|S" and S by "D", then drop the leading bar

    Applied to the string of a threshold graph G, the result evaluates to a
    complex isomorphic to the independence complex of G.
    """
    if any(t is DsKind.BAR for t in s.tokens):
        raise DsTransformError("flag transform is defined on bar-free strings only")
    out: List[DsKind] = []
    for t in s.tokens:
        if t is DsKind.DISJOINT:
            out.extend((DsKind.BAR, DsKind.STAR))
        else:
            out.append(DsKind.DISJOINT)
    if out and out[0] is DsKind.BAR:
        out.pop(0)
    return DsString(tokens=tuple(out))


def _segments(s: DsString) -> List[List[DsKind]]:
    segments: List[List[DsKind]] = [[]]
    for t in s.tokens:
        if t is DsKind.BAR:
            segments.append([])
        else:
            segments[-1].append(t)
    return segments


def is_one_star_per_dimension(s: DsString) -> bool:
    """At most one S before the first bar and exactly one S after each bar"""
    segments = _segments(s)
    if sum(1 for t in segments[0] if t is DsKind.STAR) > 1:
        return False
    return all(sum(1 for t in seg if t is DsKind.STAR) == 1 for seg in segments[1:])


def coloring_from_string(s: DsString, naming: str = NAMING_LABELS) -> BalancedColoring:
    """Color the initial D block 0 and give each later "S D...D" block its own color

    Vertices are named as in evaluate with the same naming.
    """
    if not is_one_star_per_dimension(s):
        raise DsTransformError(f"{s.render()} does not have one star per dimension")
    labels = label_from_string(s)
    colors: Dict[int, int] = {}
    color = 0
    created = 0
    for token in s.tokens:
        if token is DsKind.BAR:
            continue
        created += 1
        if token is DsKind.STAR and created > 1:
            color += 1
        name = labels.rank(created) if naming == NAMING_LABELS else created
        colors[name] = color
    return BalancedColoring(colors=dict(sorted(colors.items())), color_count=color + 1)


def enumerate_canonical_strings(
    vertex_count: int, max_bars: Optional[int] = None
) -> Iterator[DsString]:
    """Canonical strings on vertex_count vertices with at most max_bars bars

    The first token is D and every later vertex is D or S, an S possibly
    preceded by a run of bars. max_bars defaults to vertex_count - 1, past
    which another bar changes nothing.
    """
    if vertex_count < 1:
        return
    budget = vertex_count - 1 if max_bars is None else max_bars

    def extend(tokens: List[DsKind], remaining: int, bars_left: int) -> Iterator[DsString]:
        if remaining == 0:
            yield DsString(tokens=tuple(tokens))
            return
        yield from extend(tokens + [DsKind.DISJOINT], remaining - 1, bars_left)
        for bars in range(bars_left + 1):
            step = [DsKind.BAR] * bars + [DsKind.STAR]
            yield from extend(tokens + step, remaining - 1, bars_left - bars)

    yield from extend([DsKind.DISJOINT], vertex_count - 1, budget)
