"""
Immutable value types.

Operations on these values live in ``haemers.services``; the models only
enforce their own structural invariants.
"""
from haemers.models.field import FieldSpec
from haemers.models.matrix import Matrix, Subspace
from haemers.models.graph import Graph, VertexLabel
from haemers.models.representation import DualRepresentation

__all__ = [
    "FieldSpec",
    "Matrix",
    "Subspace",
    "Graph",
    "VertexLabel",
    "DualRepresentation",
]
