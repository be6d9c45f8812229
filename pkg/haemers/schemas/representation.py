"""
Schemas for representation verification
"""
from typing import List

from pydantic import BaseModel, Field


class VertexCheck(BaseModel):
    """Outcome of the two per-vertex conditions"""
    vertex: str
    dim: int = Field(..., description="dim X_v")
    dim_ok: bool = Field(..., description="dim X_v equals the local dimension")
    intersection_dim: int = Field(..., description="dim(X_v ∩ sum of neighbour subspaces)")

    @property
    def ok(self) -> bool:
        return self.dim_ok and self.intersection_dim == 0


class VerificationReport(BaseModel):
    """Full verification of a dual representation"""
    valid: bool
    ambient: int
    local_dim: int
    vertices: List[VertexCheck] = []
    total_span_dim: int = Field(..., description="dim of the sum of all vertex subspaces")

    @property
    def failures(self) -> List[VertexCheck]:
        return [check for check in self.vertices if not check.ok]
