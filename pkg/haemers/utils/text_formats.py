"""
Plain-text formats for matrices, graphs and representations.

Matrix::

    field 2            (or: field Q)
    3 4
    1 0 1 1
    ...

Graph::

    vertices 5
    vertex 1           (optional, one per vertex in order)
    edge 1 2

Representation::

    graph c5.graph     (graph file relative to this file, or a builtin spec)
    field 2
    n 5
    d 2
    vertex 1@0
    1 0 0 1 0
    ...

Blank lines and ``#`` comments are ignored everywhere.
"""
import logging
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

from haemers.core.exceptions import HaemersError, ParseError
from haemers.models.field import FieldSpec
from haemers.models.graph import Graph, VertexLabel
from haemers.models.matrix import Matrix
from haemers.models.representation import DualRepresentation
from haemers.services.linalg import subspace_span

logger = logging.getLogger(__name__)


def _lines(text: str) -> List[Tuple[int, List[str]]]:
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].split()
        if content:
            out.append((number, content))
    return out


def _expect(tokens: List[str], keyword: str, number: int, arity: int = 1) -> List[str]:
    if tokens[0] != keyword or len(tokens) != arity + 1:
        raise ParseError(f"line {number}: expected '{keyword}' with {arity} value(s), got {' '.join(tokens)!r}")
    return tokens[1:]


def _int(token: str, number: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"line {number}: {token!r} is not an integer")


def _row(field: FieldSpec, tokens: List[str], width: int, number: int) -> List:
    if len(tokens) != width:
        raise ParseError(f"line {number}: expected {width} entries, got {len(tokens)}")
    try:
        return [field.scalar(token) for token in tokens]
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"line {number}: bad scalar ({exc})")


def format_row(values) -> str:
    return " ".join(str(x) for x in values)


def format_matrix(m: Matrix) -> str:
    lines = [f"field {m.field.token}", f"{m.rows} {m.cols}"]
    lines.extend(format_row(m.row(i)) for i in range(m.rows))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> Matrix:
    lines = _lines(text)
    if len(lines) < 2:
        raise ParseError("matrix needs a field line and a shape line")
    number, tokens = lines[0]
    field = FieldSpec.parse(_expect(tokens, "field", number)[0])
    number, tokens = lines[1]
    if len(tokens) != 2:
        raise ParseError(f"line {number}: expected 'rows cols'")
    rows, cols = _int(tokens[0], number), _int(tokens[1], number)
    body = lines[2:]
    if len(body) != rows:
        raise ParseError(f"matrix declares {rows} rows but has {len(body)}")
    return Matrix.from_rows(field, [_row(field, t, cols, n) for n, t in body], cols=cols)


def format_graph(g: Graph) -> str:
    lines = [f"vertices {g.order}"]
    lines.extend(f"vertex {v}" for v in g.vertices)
    lines.extend(f"edge {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    lines = _lines(text)
    if not lines:
        raise ParseError("empty graph file")
    number, tokens = lines[0]
    count = _int(_expect(tokens, "vertices", number)[0], number)
    labels: List[VertexLabel] = []
    edges = []
    for number, tokens in lines[1:]:
        if tokens[0] == "vertex":
            labels.append(VertexLabel.parse(_expect(tokens, "vertex", number)[0]))
        elif tokens[0] == "edge":
            u, v = _expect(tokens, "edge", number, arity=2)
            edges.append((VertexLabel.parse(u), VertexLabel.parse(v)))
        else:
            raise ParseError(f"line {number}: unknown keyword {tokens[0]!r}")
    if not labels:
        labels = [VertexLabel.base(i) for i in range(1, count + 1)]
    if len(labels) != count:
        raise ParseError(f"graph declares {count} vertices but lists {len(labels)}")
    try:
        return Graph.from_edges(labels, edges)
    except HaemersError as exc:
        raise ParseError(exc.detail)


def format_representation(rep: DualRepresentation, graph_ref: str) -> str:
    lines = [
        f"graph {graph_ref}",
        f"field {rep.field.token}",
        f"n {rep.ambient}",
        f"d {rep.local_dim}",
    ]
    for label in rep.graph.vertices:
        lines.append(f"vertex {label}")
        basis = rep.spaces[label].basis
        lines.extend(format_row(basis.row(i)) for i in range(basis.rows))
    return "\n".join(lines) + "\n"


def parse_representation(text: str, resolve_graph: Callable[[str], Graph]) -> DualRepresentation:
    """
    Parse a representation; ``resolve_graph`` turns the ``graph`` reference
    into a Graph.
    """
    lines = _lines(text)
    if len(lines) < 4:
        raise ParseError("representation needs graph, field, n and d lines")
    graph = resolve_graph(_expect(lines[0][1], "graph", lines[0][0])[0])
    field = FieldSpec.parse(_expect(lines[1][1], "field", lines[1][0])[0])
    n = _int(_expect(lines[2][1], "n", lines[2][0])[0], lines[2][0])
    d = _int(_expect(lines[3][1], "d", lines[3][0])[0], lines[3][0])
    blocks: Dict[VertexLabel, List] = {}
    current: Optional[VertexLabel] = None
    for number, tokens in lines[4:]:
        if tokens[0] == "vertex":
            current = VertexLabel.parse(_expect(tokens, "vertex", number)[0])
            if current in blocks:
                raise ParseError(f"line {number}: vertex {current} listed twice")
            blocks[current] = []
        elif current is None:
            raise ParseError(f"line {number}: basis row before any vertex block")
        else:
            blocks[current].append(_row(field, tokens, n, number))
    spaces = {
        label: subspace_span(Matrix.from_rows(field, rows, cols=n)) for label, rows in blocks.items()
    }
    try:
        return DualRepresentation(graph, field, n, d, spaces)
    except HaemersError as exc:
        raise ParseError(exc.detail)


def read_text(path: Path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}")


def write_text(path: Path, text: str) -> None:
    Path(path).write_text(text)
    logger.info(f"Wrote {path}")
