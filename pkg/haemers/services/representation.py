"""
Storing, checking and transforming dual (n, d)-representations.

A representation is valid when every X_v has dimension d and
X_v ∩ Σ_{w ~ v} X_w = {0} for every vertex v.
"""
import logging
from fractions import Fraction
from math import lcm
from typing import Dict, Iterable, List, Sequence

from haemers.constants.graphs import GraphKind
from haemers.core.exceptions import BadParameter, FieldMismatch, GraphMismatch, UnknownVertex
from haemers.models.field import FieldSpec
from haemers.models.graph import Graph, VertexLabel
from haemers.models.matrix import Subspace
from haemers.models.representation import DualRepresentation
from haemers.schemas.representation import VertexCheck, VerificationReport
from haemers.services.graphs import join, join_relabeling, named_graph, or_product, pair_label
from haemers.services.linalg import (
    coordinate_subspace,
    embed,
    full_subspace,
    intersect_all,
    intersection_dimension,
    restrict_columns,
    subspace_sum_all,
    subspace_tensor,
)
from haemers.utils.parallel import map_ordered

logger = logging.getLogger(__name__)


def neighbourhood_sums(rep: DualRepresentation) -> Dict[VertexLabel, Subspace]:
    """Σ_{w ~ v} X_w for every vertex v."""

    def neighbourhood(label: VertexLabel) -> Subspace:
        return subspace_sum_all(
            rep.field, rep.ambient, (rep.spaces[w] for w in rep.graph.neighbors(label))
        )

    vertices = list(rep.graph.vertices)
    return dict(zip(vertices, map_ordered(neighbourhood, vertices)))


def verify(rep: DualRepresentation) -> VerificationReport:
    """
    Check both representation conditions at every vertex.

    Invalidity is reported in the result, never raised.

    Args:
        rep: representation to check.

    Returns:
        VerificationReport with per-vertex dimensions, intersection
        dimensions and the dimension of the total span.
    """
    sums = neighbourhood_sums(rep)

    def check(label: VertexLabel) -> VertexCheck:
        space = rep.spaces[label]
        return VertexCheck(
            vertex=str(label),
            dim=space.dim,
            dim_ok=space.dim == rep.local_dim,
            intersection_dim=intersection_dimension(space, sums[label]),
        )

    checks = map_ordered(check, rep.graph.vertices)
    total = subspace_sum_all(rep.field, rep.ambient, rep.spaces.values())
    valid = all(c.ok for c in checks)
    if not valid:
        bad = [c.vertex for c in checks if not c.ok]
        logger.info(f"Representation invalid at {len(bad)} vertices: {', '.join(bad[:8])}")
    return VerificationReport(
        valid=valid,
        ambient=rep.ambient,
        local_dim=rep.local_dim,
        vertices=checks,
        total_span_dim=total.dim,
    )


def value(rep: DualRepresentation) -> Fraction:
    return rep.value


def standard_complete_rep(m: int, field: FieldSpec) -> DualRepresentation:
    """K_m with X_i = span(e_i) in F^m."""
    graph = named_graph(GraphKind.COMPLETE, m)
    spaces = {v: coordinate_subspace(field, m, [i]) for i, v in enumerate(graph.vertices)}
    return DualRepresentation(graph, field, m, 1, spaces)


def scale_d(rep: DualRepresentation, t: int) -> DualRepresentation:
    """Replace every X_v by X_v ⊗ F^t, giving an (n t, d t)-representation."""
    if t < 1:
        raise BadParameter(f"scale factor must be at least 1, got {t}")
    if t == 1:
        return rep
    line = full_subspace(rep.field, t)
    spaces = {v: subspace_tensor(x, line) for v, x in rep.spaces.items()}
    return DualRepresentation(rep.graph, rep.field, rep.ambient * t, rep.local_dim * t, spaces)


def join_reps(a: DualRepresentation, b: DualRepresentation) -> DualRepresentation:
    """
    Representation of join(G_a, G_b) on block-disjoint coordinates.

    Local dimensions are first equalised to their lcm with ``scale_d``; the
    value of the result is value(a) + value(b).
    """
    if a.field != b.field:
        raise FieldMismatch(f"cannot join representations over {a.field} and {b.field}")
    common = lcm(a.local_dim, b.local_dim)
    a = scale_d(a, common // a.local_dim)
    b = scale_d(b, common // b.local_dim)
    ambient = a.ambient + b.ambient
    rename = join_relabeling(a.graph, b.graph)
    spaces = {v: embed(x, ambient, 0) for v, x in a.spaces.items()}
    spaces.update({rename[v]: embed(y, ambient, a.ambient) for v, y in b.spaces.items()})
    return DualRepresentation(join(a.graph, b.graph), a.field, ambient, common, spaces)


def compress(rep: DualRepresentation) -> DualRepresentation:
    """
    Restrict to the span of all subspaces.

    The coordinates kept are the pivot columns of the canonical basis of
    Σ_v X_v; projecting onto them is injective on that span, so every
    dimension of sums and intersections is preserved.
    """
    total = subspace_sum_all(rep.field, rep.ambient, rep.spaces.values())
    if total.dim == rep.ambient:
        return rep
    columns = total.pivot_columns
    spaces = {v: restrict_columns(x, columns) for v, x in rep.spaces.items()}
    logger.debug(f"Compressed ambient {rep.ambient} -> {total.dim}")
    return DualRepresentation(rep.graph, rep.field, total.dim, rep.local_dim, spaces)


def relabel(rep: DualRepresentation, mapping: Dict[VertexLabel, VertexLabel]) -> DualRepresentation:
    graph = rep.graph.relabel(mapping)
    spaces = {mapping.get(v, v): x for v, x in rep.spaces.items()}
    return DualRepresentation(graph, rep.field, rep.ambient, rep.local_dim, spaces)


def group_sum(rep: DualRepresentation, group: Iterable[VertexLabel]) -> Subspace:
    return subspace_sum_all(rep.field, rep.ambient, (rep.space(v) for v in group))


def intersection_dim(rep: DualRepresentation, groups: Sequence[Iterable[VertexLabel]]) -> int:
    """
    dim of ⋂_g (Σ_{v in g} X_v).

    Singleton groups give plain intersections ⋂ X_v; larger groups express
    mixed terms such as (X_a + X_b) ∩ X_c.

    Raises:
        UnknownVertex: a group names a vertex outside the graph.
    """
    if not groups:
        raise BadParameter("intersection_dim needs at least one group")
    sums = [group_sum(rep, group) for group in groups]
    return intersect_all(sums).dim


def span_dim(rep: DualRepresentation, vertices: Iterable[VertexLabel]) -> int:
    return group_sum(rep, vertices).dim


def pad_ambient(rep: DualRepresentation, extra: int) -> DualRepresentation:
    """Same subspaces inside F^(n + extra)."""
    if extra < 0:
        raise BadParameter(f"cannot pad by {extra} coordinates")
    if extra == 0:
        return rep
    ambient = rep.ambient + extra
    spaces = {v: embed(x, ambient, 0) for v, x in rep.spaces.items()}
    return DualRepresentation(rep.graph, rep.field, ambient, rep.local_dim, spaces)


def pullback(
    rep: DualRepresentation, graph: Graph, mapping: Dict[VertexLabel, VertexLabel]
) -> DualRepresentation:
    """
    Representation of ``graph`` through a homomorphism into ``rep.graph``.

    X_v := Y_{f(v)}. Edges must map to edges, which keeps the result valid.

    Raises:
        GraphMismatch: ``mapping`` is not a homomorphism.
        UnknownVertex: a vertex is unmapped or mapped outside ``rep.graph``.
    """
    for v in graph.vertices:
        if v not in mapping:
            raise UnknownVertex(f"{v} has no image under the homomorphism")
        rep.space(mapping[v])
    for u, v in graph.edges():
        if mapping[u] == mapping[v] or not rep.graph.has_edge(mapping[u], mapping[v]):
            raise GraphMismatch(f"edge {u}-{v} is not mapped to an edge")
    spaces = {v: rep.spaces[mapping[v]] for v in graph.vertices}
    return DualRepresentation(graph, rep.field, rep.ambient, rep.local_dim, spaces)


def product_reps(a: DualRepresentation, b: DualRepresentation) -> DualRepresentation:
    """
    Representation of the OR-product: X_(g,h) := X_g ⊗ Y_h.

    value(result) = value(a) * value(b).
    """
    if a.field != b.field:
        raise FieldMismatch(f"cannot multiply representations over {a.field} and {b.field}")
    graph = or_product(a.graph, b.graph)
    spaces = {
        pair_label(g, h): subspace_tensor(a.spaces[g], b.spaces[h])
        for g in a.graph.vertices
        for h in b.graph.vertices
    }
    return DualRepresentation(
        graph, a.field, a.ambient * b.ambient, a.local_dim * b.local_dim, spaces
    )


def failing_vertices(report: VerificationReport) -> List[str]:
    return [check.vertex for check in report.failures]
