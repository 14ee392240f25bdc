"""
Pydantic data models for ShiftLab
Complexes, graphs, construction strings, labelings, certificates and reports
"""

import json
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .subsets import (
    bit,
    mask_of,
    maximal_masks,
    popcount,
    vertex_pairs,
    vertices_of,
)

Face = Tuple[int, ...]
FVector = Tuple[int, ...]


def _format_face(face: Face, vertex_count: int) -> str:
    if vertex_count <= 9:
        return "".join(str(v) for v in face) or "{}"
    return "{" + ",".join(str(v) for v in face) + "}"


class SimplicialComplex(BaseModel):
    """Abstract simplicial complex on vertices 1..vertex_count, stored by its facets

    Facets are normalized on construction: each sorted, inclusion-maximal,
    deduplicated and listed in (size, lexicographic) order. Vertices that lie
    in no facet are ghosts: labels that are not faces.
    """

    model_config = ConfigDict(frozen=True)

    vertex_count: int = Field(..., ge=1)
    facets: Tuple[Face, ...] = ()

    @model_validator(mode="before")
    @classmethod
    def normalize_facets(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        masks = []
        for face in data.get("facets", ()) or ():
            labels = [int(v) for v in face]
            for v in labels:
                if v < 1:
                    raise ValueError(f"vertex {v} is not a positive label")
            masks.append(mask_of(labels))
        data = dict(data)
        data["facets"] = tuple(vertices_of(m) for m in maximal_masks(masks))
        return data

    @model_validator(mode="after")
    def check_labels(self) -> "SimplicialComplex":
        top = max((f[-1] for f in self.facets), default=0)
        if top > self.vertex_count:
            raise ValueError(f"vertex {top} out of range 1..{self.vertex_count}")
        return self

    @classmethod
    def from_masks(cls, vertex_count: int, masks) -> "SimplicialComplex":
        """Trusted constructor for internal use: masks need not be maximal"""
        return cls.model_construct(
            vertex_count=vertex_count,
            facets=tuple(vertices_of(m) for m in maximal_masks(masks)),
        )

    @property
    def facet_masks(self) -> Tuple[int, ...]:
        """Facets as bitmasks"""
        return tuple(mask_of(f) for f in self.facets)

    @property
    def support_mask(self) -> int:
        mask = 0
        for f in self.facets:
            mask |= mask_of(f)
        return mask

    @property
    def vertices(self) -> Face:
        """Labels that are faces"""
        return vertices_of(self.support_mask)

    @property
    def ghost_vertices(self) -> Face:
        """Labels that lie in no facet"""
        support = self.support_mask
        return tuple(v for v in range(1, self.vertex_count + 1) if not support & bit(v))

    def describe(self) -> str:
        body = ",".join(_format_face(f, self.vertex_count) for f in self.facets)
        return f"n={self.vertex_count} facets=[{body}]"

    def __str__(self) -> str:
        return self.describe()


class Graph(BaseModel):
    """Simple undirected graph on vertices 1..vertex_count"""

    model_config = ConfigDict(frozen=True)

    vertex_count: int = Field(..., ge=1)
    edges: Tuple[Tuple[int, int], ...] = ()

    @model_validator(mode="before")
    @classmethod
    def normalize_edges(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        seen = set()
        for edge in data.get("edges", ()) or ():
            u, v = (int(x) for x in edge)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if min(u, v) < 1:
                raise ValueError(f"vertex {min(u, v)} is not a positive label")
            seen.add((min(u, v), max(u, v)))
        data = dict(data)
        data["edges"] = tuple(sorted(seen))
        return data

    @model_validator(mode="after")
    def check_endpoints(self) -> "Graph":
        top = max((v for _, v in self.edges), default=0)
        if top > self.vertex_count:
            raise ValueError(f"vertex {top} out of range 1..{self.vertex_count}")
        return self

    @classmethod
    def from_edge_mask(cls, vertex_count: int, edge_mask: int) -> "Graph":
        """Graph whose edges are the set bits of edge_mask over vertex_pairs order"""
        pairs = vertex_pairs(vertex_count)
        edges = tuple(pairs[k] for k in range(len(pairs)) if edge_mask >> k & 1)
        return cls.model_construct(vertex_count=vertex_count, edges=edges)

    @classmethod
    def from_adjacency(cls, vertex_count: int, adjacency) -> "Graph":
        """Graph from one neighbor mask per vertex"""
        edges = tuple(
            (u, v)
            for u in range(1, vertex_count + 1)
            for v in range(u + 1, vertex_count + 1)
            if adjacency[u - 1] & bit(v)
        )
        return cls.model_construct(vertex_count=vertex_count, edges=edges)

    def adjacency(self) -> Tuple[int, ...]:
        """Open neighborhood masks, index v-1"""
        adj = [0] * self.vertex_count
        for u, v in self.edges:
            adj[u - 1] |= bit(v)
            adj[v - 1] |= bit(u)
        return tuple(adj)

    def edge_mask(self) -> int:
        """Inverse of from_edge_mask"""
        index = {pair: k for k, pair in enumerate(vertex_pairs(self.vertex_count))}
        mask = 0
        for edge in self.edges:
            mask |= 1 << index[edge]
        return mask

    def neighbors(self, v: int) -> Face:
        """Sorted neighbors of v"""
        return vertices_of(self.adjacency()[v - 1])

    def degree(self, v: int) -> int:
        """Number of neighbors of v"""
        return popcount(self.adjacency()[v - 1])

    def describe(self) -> str:
        body = ",".join(f"{u}-{v}" for u, v in self.edges)
        return f"n={self.vertex_count} edges=[{body}]"

    def __str__(self) -> str:
        return self.describe()


class VertexLabeling(BaseModel):
    """Bijection from vertices 1..n to ranks 1..n"""

    model_config = ConfigDict(frozen=True)

    ranks: Dict[int, int]

    @field_validator("ranks")
    @classmethod
    def check_bijection(cls, v: Dict[int, int]) -> Dict[int, int]:
        expected = set(range(1, len(v) + 1))
        if set(v) != expected or set(v.values()) != expected:
            raise ValueError("labeling is not a bijection on 1..n")
        return v

    @classmethod
    def identity(cls, n: int) -> "VertexLabeling":
        """Labeling that ranks every vertex by its own label"""
        return cls(ranks={v: v for v in range(1, n + 1)})

    @classmethod
    def from_order(cls, order) -> "VertexLabeling":
        """order[k] receives rank k+1"""
        return cls(ranks={v: k + 1 for k, v in enumerate(order)})

    @property
    def size(self) -> int:
        return len(self.ranks)

    def rank(self, v: int) -> int:
        """Rank of vertex v"""
        return self.ranks[v]

    def order(self) -> Tuple[int, ...]:
        """Vertices sorted by rank"""
        return tuple(sorted(self.ranks, key=self.ranks.__getitem__))


class DsKind(str, Enum):
    DISJOINT = "D"
    STAR = "S"
    BAR = "|"


class DsString(BaseModel):
    """Construction string over D, S and the dimension bar"""

    model_config = ConfigDict(frozen=True)

    tokens: Tuple[DsKind, ...]

    @property
    def vertex_count(self) -> int:
        return sum(1 for t in self.tokens if t is not DsKind.BAR)

    @property
    def bar_count(self) -> int:
        return sum(1 for t in self.tokens if t is DsKind.BAR)

    def render(self) -> str:
        return "".join(t.value for t in self.tokens)

    def __str__(self) -> str:
        return self.render()


class CreationSequence(BaseModel):
    """Threshold creation order: steps[i] says how vertices[i] was added"""

    model_config = ConfigDict(frozen=True)

    steps: Tuple[DsKind, ...]
    vertices: Tuple[int, ...]

    @model_validator(mode="after")
    def check_sequence(self) -> "CreationSequence":
        if len(self.steps) != len(self.vertices):
            raise ValueError("steps and vertices differ in length")
        if any(s is DsKind.BAR for s in self.steps):
            raise ValueError("creation sequences have no bars")
        if self.steps and self.steps[0] is not DsKind.DISJOINT:
            raise ValueError("the first created vertex is always disjoint")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertices repeat")
        return self

    def to_ds_string(self) -> DsString:
        """Construction string of the same steps, without bars"""
        return DsString(tokens=self.steps)


class ThresholdCertificate(BaseModel):
    """Positive weights and threshold: independent exactly when total weight <= threshold"""

    model_config = ConfigDict(frozen=True)

    weights: Dict[int, int]
    threshold: int

    @field_validator("weights")
    @classmethod
    def check_positive(cls, v: Dict[int, int]) -> Dict[int, int]:
        for vertex, w in v.items():
            if w <= 0:
                raise ValueError(f"weight of vertex {vertex} must be positive")
        return v


class BalancedColoring(BaseModel):
    """Proper coloring of the 1-skeleton with dimension + 1 colors"""

    model_config = ConfigDict(frozen=True)

    colors: Dict[int, int]
    color_count: int = Field(..., ge=0)

    @model_validator(mode="after")
    def check_range(self) -> "BalancedColoring":
        for v, c in self.colors.items():
            if c < 0 or c >= self.color_count:
                raise ValueError(f"color {c} of vertex {v} outside 0..{self.color_count - 1}")
        return self


class PropertyCheck(BaseModel):
    """Property checklist for one complex"""

    vertex_count: int
    dimension: int
    f_vector: List[int] = []
    minimal_nonfaces: List[Face] = []
    ghost_vertices: List[int] = []
    is_pure: bool = False
    is_flag: bool = False
    is_balanced: Optional[bool] = None
    is_pencil: bool = False
    is_shifted: Optional[bool] = None
    is_order_ideal: Optional[bool] = None
    shifted_labeling: Optional[VertexLabeling] = None
    balanced_coloring: Optional[BalancedColoring] = None
    satisfied: List[str] = []
    issues: List[str] = []

    @model_validator(mode="after")
    def collect_satisfied(self) -> "PropertyCheck":
        names = ["pure", "flag", "balanced", "pencil", "shifted", "order_ideal"]
        self.satisfied = [n for n in names if getattr(self, f"is_{n}") is True]
        return self


class TheoremId(str, Enum):
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    T4 = "T4"
    T5 = "T5"
    T6 = "T6"
    T7 = "T7"
    T8 = "T8"
    HOPE = "HOPE"
    GOLDEN = "golden"

    @classmethod
    def parse(cls, value: str) -> "TheoremId":
        """Case-insensitive lookup of a theorem id"""
        for member in cls:
            if member.value.lower() == str(value).strip().lower():
                return member
        raise ValueError(f"unknown theorem id: {value}")


class Counterexample(BaseModel):
    """One failing instance; index orders counterexamples and is not serialized"""

    input: str
    detail: str
    index: int = Field(default=0, exclude=True)


class VerdictReport(BaseModel):
    """Outcome of one harness run"""

    theorem: TheoremId
    bound: int
    checked: int = 0
    counterexamples: List[Counterexample] = []
    tallies: Dict[str, int] = {}
    elapsed_ms: float = 0.0
    jobs: int = 1

    @property
    def passed(self) -> bool:
        """True when no counterexample was found"""
        return not self.counterexamples

    def payload(self, include_timing: bool = True) -> Dict[str, Any]:
        """Report as a dict, optionally without timing and worker fields"""
        data = self.model_dump(mode="json")
        if not include_timing:
            data.pop("elapsed_ms", None)
            data.pop("jobs", None)
        return data

    def to_json(self, include_timing: bool = True) -> str:
        """Report as sorted JSON"""
        return json.dumps(self.payload(include_timing), sort_keys=True, indent=2)
