"""
Builtin graph specs and file-backed graphs/representations.

Specs: ``k<m>``, ``c<n>``, ``e<n>``, ``p<n>``, ``petersen``, ``groetzsch``
(= M_2(M_2(K_2)), the labels a double lift of K_2 produces) and
``mycielski:<base>:<r>``. Anything else is read as a graph file.
"""
import re
from pathlib import Path
from typing import Optional

from haemers.constants.graphs import GraphKind
from haemers.core.exceptions import ParseError
from haemers.models.graph import Graph
from haemers.models.representation import DualRepresentation
from haemers.services.graphs import generalized_mycielski, named_graph, petersen_graph
from haemers.utils.text_formats import (
    format_graph,
    format_representation,
    parse_graph,
    parse_representation,
    read_text,
    write_text,
)

MYCIELSKI_PREFIX = "mycielski:"
GRAPH_SUFFIX = ".graph"

_FAMILIES = {
    "k": GraphKind.COMPLETE,
    "c": GraphKind.CYCLE,
    "e": GraphKind.EMPTY,
    "p": GraphKind.PATH,
}
_FAMILY_SPEC = re.compile(r"^(?P<family>[kcep])(?P<size>\d+)$")


def resolve_graph(spec: str, base_dir: Optional[Path] = None) -> Graph:
    """
    Graph for a builtin spec or a graph file path (relative to ``base_dir``).

    Raises:
        ParseError: malformed spec or unreadable file.
    """
    text = spec.strip()
    lowered = text.lower()
    match = _FAMILY_SPEC.match(lowered)
    if match:
        return named_graph(_FAMILIES[match.group("family")], int(match.group("size")))
    if lowered == "petersen":
        return petersen_graph()
    if lowered == "groetzsch":
        return generalized_mycielski(generalized_mycielski(named_graph(GraphKind.COMPLETE, 2), 2), 2)
    if lowered.startswith(MYCIELSKI_PREFIX):
        base, _, levels = text[len(MYCIELSKI_PREFIX):].rpartition(":")
        if not base or not levels.isdigit():
            raise ParseError(f"expected mycielski:<base>:<r>, got {spec!r}")
        return generalized_mycielski(resolve_graph(base, base_dir), int(levels))
    path = Path(text)
    if base_dir is not None and not path.is_absolute():
        path = Path(base_dir) / path
    return parse_graph(read_text(path))


def load_representation(path: Path) -> DualRepresentation:
    path = Path(path)
    return parse_representation(read_text(path), lambda ref: resolve_graph(ref, path.parent))


def save_representation(rep: DualRepresentation, path: Path) -> Path:
    """
    Write ``rep`` to ``path`` and its graph to a sibling ``.graph`` file.

    Returns:
        Path of the graph file.
    """
    path = Path(path)
    graph_path = path.with_suffix(GRAPH_SUFFIX)
    write_text(graph_path, format_graph(rep.graph))
    write_text(path, format_representation(rep, graph_path.name))
    return graph_path
