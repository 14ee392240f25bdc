"""
Text formats for complexes and graphs
One facet (or edge) per line, vertices separated by spaces, optional n=<k> header
"""

import logging
import re
from pathlib import Path
from typing import List, Optional, Tuple

from pydantic import ValidationError

from .errors import ComplexFormatError
from .models import Graph, SimplicialComplex

logger = logging.getLogger(__name__)

HEADER_PATTERN = re.compile(r"^n\s*=\s*(\d+)$", re.IGNORECASE)


class ComplexFileParser:
    """Parse complexes and graphs from text or files"""

    def parse_complex_file(self, path: str) -> SimplicialComplex:
        """Parse a complex from a text file"""
        return self.parse_complex_text(self._read(path))

    def parse_graph_file(self, path: str) -> Graph:
        """Parse a graph from an edge-list file"""
        return self.parse_graph_text(self._read(path))

    def parse_complex_text(self, text: str) -> SimplicialComplex:
        """Parse facets; without a header, n is the largest label used"""
        n, rows = self._parse_rows(text)
        n = self._resolve_vertex_count(n, rows)
        try:
            return SimplicialComplex(vertex_count=n, facets=[vertices for _, vertices in rows])
        except ValidationError as e:
            raise ComplexFormatError(self._first_error(e)) from e

    def parse_graph_text(self, text: str) -> Graph:
        """Parse edges, one "u v" pair per line"""
        n, rows = self._parse_rows(text)
        for line_number, vertices in rows:
            if len(vertices) != 2:
                raise ComplexFormatError(
                    f"an edge needs exactly two endpoints, got {len(vertices)}", line_number
                )
            if vertices[0] == vertices[1]:
                raise ComplexFormatError(f"loop at vertex {vertices[0]}", line_number)
        n = self._resolve_vertex_count(n, rows)
        try:
            return Graph(vertex_count=n, edges=[vertices for _, vertices in rows])
        except ValidationError as e:
            raise ComplexFormatError(self._first_error(e)) from e

    def _read(self, path: str) -> str:
        try:
            return Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise ComplexFormatError(f"cannot read {path}: {e.strerror or e}") from e

    def _parse_rows(self, text: str) -> Tuple[Optional[int], List[Tuple[int, Tuple[int, ...]]]]:
        n: Optional[int] = None
        rows: List[Tuple[int, Tuple[int, ...]]] = []
        for line_number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            header = HEADER_PATTERN.match(line)
            if header:
                if n is not None:
                    raise ComplexFormatError("duplicate n= header", line_number)
                n = int(header.group(1))
                if n < 1:
                    raise ComplexFormatError("vertex count must be at least 1", line_number)
                continue
            try:
                vertices = tuple(int(token) for token in line.split())
            except ValueError:
                raise ComplexFormatError(f"not a list of vertices: {line!r}", line_number) from None
            for v in vertices:
                if v < 1:
                    raise ComplexFormatError(f"vertex labels must be positive, got {v}", line_number)
                if n is not None and v > n:
                    raise ComplexFormatError(f"vertex {v} out of range 1..{n}", line_number)
            rows.append((line_number, vertices))
        return n, rows

    def _resolve_vertex_count(self, n: Optional[int], rows) -> int:
        if n is not None:
            return n
        labels = [v for _, vertices in rows for v in vertices]
        if not labels:
            raise ComplexFormatError("no n= header and no vertices to infer it from")
        return max(labels)

    def _first_error(self, error: ValidationError) -> str:
        return error.errors()[0].get("msg", str(error))


def format_complex_text(K: SimplicialComplex) -> str:
    """Render a complex in the text format, header included"""
    lines = [f"n={K.vertex_count}"]
    lines += [" ".join(str(v) for v in facet) for facet in K.facets]
    return "\n".join(lines) + "\n"


def format_graph_text(G: Graph) -> str:
    """Edge-list text with an n= header"""
    lines = [f"n={G.vertex_count}"]
    lines += [f"{u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"
