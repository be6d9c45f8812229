"""
Graph constructions and exhaustive graph parameters.

Graphs are small (tens of vertices); adjacency is kept as one bitset per
vertex so clique and colouring searches work with integer masks.
"""
import logging
from typing import Dict, List, Tuple

import networkx as nx

from haemers.constants.graphs import GraphKind
from haemers.core.config import settings
from haemers.core.exceptions import BadParameter, TooLarge
from haemers.models.graph import Graph, VertexLabel, iter_bits

logger = logging.getLogger(__name__)

PRIME_MARK = "'"


def _numbered(size: int) -> List[VertexLabel]:
    return [VertexLabel.base(i) for i in range(1, size + 1)]


def named_graph(kind: str, size: int) -> Graph:
    """
    Standard graph of a named family with Base labels 1..size.

    Args:
        kind: one of ``GraphKind`` (complete, cycle, empty, path).
        size: number of vertices.

    Raises:
        BadParameter: unknown family, size < 1, or a cycle shorter than 3.
    """
    if size < 1:
        raise BadParameter(f"{kind} graph needs at least one vertex, got {size}")
    vertices = _numbered(size)
    if kind == GraphKind.COMPLETE:
        edges = [(vertices[i], vertices[j]) for i in range(size) for j in range(i + 1, size)]
    elif kind == GraphKind.CYCLE:
        if size < 3:
            raise BadParameter(f"cycle needs at least 3 vertices, got {size}")
        edges = [(vertices[i], vertices[(i + 1) % size]) for i in range(size)]
    elif kind == GraphKind.EMPTY:
        edges = []
    elif kind == GraphKind.PATH:
        edges = [(vertices[i], vertices[i + 1]) for i in range(size - 1)]
    else:
        raise BadParameter(f"unknown graph family {kind!r}")
    return Graph.from_edges(vertices, edges)


def petersen_graph() -> Graph:
    vertices = _numbered(10)
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(vertices, [(vertices[i], vertices[j]) for i, j in outer + spokes + inner])


def generalized_mycielski(g: Graph, r: int) -> Graph:
    """
    The generalized Mycielskian M_r(g).

    Vertices are ``(v, k)`` for k in 0..r-1, labelled ``Level(str(v), k)``,
    plus the apex ``z``. Edges: level-0 copies of E(g), ``(u, k) ~ (v, k+1)``
    for every edge uv, and ``(v, r-1) ~ z``.
    """
    if r < 1:
        raise BadParameter(f"Mycielski level count must be at least 1, got {r}")
    levels = [[VertexLabel.at_level(v, k) for v in g.vertices] for k in range(r)]
    apex = VertexLabel.apex()
    position = g.index
    edges = []
    for u, v in g.edges():
        i, j = position[u], position[v]
        edges.append((levels[0][i], levels[0][j]))
        for k in range(r - 1):
            edges.append((levels[k][i], levels[k + 1][j]))
            edges.append((levels[k][j], levels[k + 1][i]))
    edges.extend((top, apex) for top in levels[r - 1])
    vertices = [label for level in levels for label in level] + [apex]
    return Graph.from_edges(vertices, edges)


def join_relabeling(g: Graph, h: Graph) -> Dict[VertexLabel, VertexLabel]:
    """Labels the vertices of ``h`` receive in ``join(g, h)``; collisions get a prime suffix."""
    taken = set(g.vertices)
    mapping = {}
    for label in h.vertices:
        fresh = label
        while fresh in taken:
            fresh = VertexLabel.base(f"{fresh}{PRIME_MARK}")
        taken.add(fresh)
        mapping[label] = fresh
    return mapping


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between them."""
    rename = join_relabeling(g, h)
    right = [rename[v] for v in h.vertices]
    edges = list(g.edges())
    edges.extend((rename[u], rename[v]) for u, v in h.edges())
    edges.extend((u, v) for u in g.vertices for v in right)
    return Graph.from_edges(list(g.vertices) + right, edges)


def pair_label(a: VertexLabel, b: VertexLabel) -> VertexLabel:
    return VertexLabel.base(f"({a},{b})")


def or_product(g: Graph, h: Graph) -> Graph:
    """
    OR-product: distinct pairs are adjacent when adjacent in either coordinate.
    """
    pairs = [(i, j) for i in range(g.order) for j in range(h.order)]
    vertices = [pair_label(g.vertices[i], h.vertices[j]) for i, j in pairs]
    edges = []
    for x, (i, j) in enumerate(pairs):
        for y in range(x + 1, len(pairs)):
            k, l = pairs[y]
            if g.adjacency[i] >> k & 1 or h.adjacency[j] >> l & 1:
                edges.append((vertices[x], vertices[y]))
    return Graph.from_edges(vertices, edges)


def or_power(g: Graph, t: int) -> Graph:
    if t < 1:
        raise BadParameter(f"OR-power exponent must be at least 1, got {t}")
    result = g
    for _ in range(t - 1):
        result = or_product(result, g)
    return result


def complement(g: Graph) -> Graph:
    full = (1 << g.order) - 1
    return Graph(g.vertices, tuple(full & ~bits & ~(1 << i) for i, bits in enumerate(g.adjacency)))


def _check_cap(g: Graph, cap: int, what: str) -> None:
    if g.order > cap:
        raise TooLarge(f"{what} is capped at {cap} vertices, graph has {g.order}")


def _colour_classes(adjacency: Tuple[int, ...], candidates: int) -> List[Tuple[int, int]]:
    """Greedy colouring of ``candidates``; vertices listed by non-decreasing colour."""
    ordered = []
    colour = 0
    uncoloured = candidates
    while uncoloured:
        colour += 1
        available = uncoloured
        while available:
            low = available & -available
            v = low.bit_length() - 1
            available &= ~adjacency[v] & ~low
            uncoloured &= ~low
            ordered.append((v, colour))
    return ordered


def clique_number(g: Graph) -> int:
    """
    Exact clique number by branch and bound.

    The number of greedy colour classes among the candidates bounds the clique
    that can still be added.

    Raises:
        TooLarge: more vertices than ``settings.clique_max_vertices``.
    """
    _check_cap(g, settings.clique_max_vertices, "clique_number")
    adjacency = g.adjacency
    best = 0

    def expand(size: int, candidates: int) -> None:
        nonlocal best
        if not candidates:
            best = max(best, size)
            return
        for v, colour in reversed(_colour_classes(adjacency, candidates)):
            if size + colour <= best:
                return
            expand(size + 1, candidates & adjacency[v])
            candidates &= ~(1 << v)

    expand(0, (1 << g.order) - 1)
    return best


def _colourable(g: Graph, k: int) -> bool:
    order = sorted(range(g.order), key=lambda v: -bin(g.adjacency[v]).count("1"))
    colours = [-1] * g.order

    def place(step: int, used: int) -> bool:
        if step == len(order):
            return True
        v = order[step]
        blocked = {colours[w] for w in iter_bits(g.adjacency[v])}
        for colour in range(min(used + 1, k)):
            if colour in blocked:
                continue
            colours[v] = colour
            if place(step + 1, max(used, colour + 1)):
                return True
        colours[v] = -1
        return False

    return place(0, 0)


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number, searching upward from the clique number."""
    _check_cap(g, settings.clique_max_vertices, "chromatic_number")
    if g.order == 0:
        return 0
    k = max(1, clique_number(g))
    while not _colourable(g, k):
        k += 1
    return k


def same_graph(a: Graph, b: Graph) -> bool:
    """Equality as labelled graphs, independent of vertex order."""
    if set(a.vertices) != set(b.vertices):
        return False
    return {frozenset(e) for e in a.edges()} == {frozenset(e) for e in b.edges()}


def is_cycle(g: Graph, length: int) -> bool:
    """Whether ``g`` is isomorphic to C_length: 2-regular and one traversal visits every vertex."""
    if length < 3 or g.order != length or any(d != 2 for d in g.degrees()):
        return False
    previous, current, seen = -1, 0, 1
    for _ in range(length - 1):
        step = next(w for w in iter_bits(g.adjacency[current]) if w != previous)
        previous, current = current, step
        seen |= 1 << current
    return seen == (1 << length) - 1 and bool(g.adjacency[current] & 1)


def is_star_plus_isolated(g: Graph, leaves: int, isolated: int) -> bool:
    """Whether ``g`` is K_{1,leaves} plus ``isolated`` isolated vertices."""
    if leaves < 1 or g.order != 1 + leaves + isolated or g.edge_count != leaves:
        return False
    degrees = g.degrees()
    for centre, degree in enumerate(degrees):
        if degree != leaves:
            continue
        others = [d for i, d in enumerate(degrees) if i != centre]
        if all(d <= 1 for d in others) and others.count(0) == isolated:
            return True
    return False


def to_networkx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(str(v) for v in g.vertices)
    out.add_edges_from((str(u), str(v)) for u, v in g.edges())
    return out
