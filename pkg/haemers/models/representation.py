"""Dual (n, d)-subspace representations."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from haemers.core.exceptions import AmbientMismatch, BadParameter, FieldMismatch, UnknownVertex
from haemers.models.field import FieldSpec
from haemers.models.graph import Graph, VertexLabel
from haemers.models.matrix import Subspace


@dataclass(frozen=True)
class DualRepresentation:
    """
    Assignment of subspaces of F^ambient to the vertices of ``graph``.

    Only the structural invariants are enforced here: one subspace per vertex,
    shared field and ambient. Whether the assignment is a valid dual
    (ambient, local_dim)-representation is decided by
    ``haemers.services.representation.verify``.
    """

    graph: Graph
    field: FieldSpec
    ambient: int
    local_dim: int
    spaces: Mapping[VertexLabel, Subspace]

    def __post_init__(self):
        if self.local_dim < 1:
            raise BadParameter(f"local dimension must be positive, got {self.local_dim}")
        if self.ambient < 0:
            raise BadParameter(f"negative ambient dimension {self.ambient}")
        missing = [v for v in self.graph.vertices if v not in self.spaces]
        if missing:
            raise UnknownVertex(f"no subspace assigned to {', '.join(map(str, missing))}")
        extra = [v for v in self.spaces if v not in self.graph.index]
        if extra:
            raise UnknownVertex(f"subspace assigned to non-vertex {', '.join(map(str, extra))}")
        for label, space in self.spaces.items():
            if space.field != self.field:
                raise FieldMismatch(f"subspace of {label} is over {space.field}, expected {self.field}")
            if space.ambient != self.ambient:
                raise AmbientMismatch(
                    f"subspace of {label} lives in ambient {space.ambient}, expected {self.ambient}"
                )

    def space(self, label: VertexLabel) -> Subspace:
        try:
            return self.spaces[label]
        except KeyError:
            raise UnknownVertex(f"{label} is not a vertex of the represented graph")

    @property
    def value(self) -> Fraction:
        return Fraction(self.ambient, self.local_dim)
