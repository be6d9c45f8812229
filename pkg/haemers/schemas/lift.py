"""
Schemas for the Mycielski lift
"""
from fractions import Fraction
from typing import Dict, List

from pydantic import BaseModel, Field


class LiftPlan(BaseModel):
    """Index data of the lift of an (n, d)-representation to M_r"""
    r: int
    n: int
    d: int
    a: List[int] = Field(..., description="a_{-1} = 0 followed by a_0 .. a_{r-1}")
    M: int = Field(..., description="number of coordinate blocks, a_{r-1} + d^(2r-1)")
    N: int = Field(..., description="certified ambient bound, n*a_{r-1} + d^(2r-1)")
    D: int = Field(..., description="dimension of every lifted subspace")
    tail_start: int
    tail_end: int
    tail_embedding: str = Field(..., description="coordinates realising the tail term")

    def a_at(self, i: int) -> int:
        """a_i for i in -1 .. r-1."""
        return self.a[i + 1]

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.N, self.D)

    def summary(self) -> str:
        values = " ".join(str(x) for x in self.a[1:])
        return (
            f"r={self.r} n={self.n} d={self.d} M={self.M} N={self.N} D={self.D}\n"
            f"a_0..a_{self.r - 1}: {values}\n"
            f"tail=[{self.tail_start},{self.tail_end}] {self.tail_embedding}"
        )


class ClassDimensions(BaseModel):
    """Dimensions measured for one vertex class of M_r(G)"""
    vertex_class: str
    dims: List[int] = []

    @property
    def distinct(self) -> List[int]:
        return sorted(set(self.dims))


class LiftDimensionReport(BaseModel):
    """Per-class dimension check of a lifted representation against its plan"""
    valid: bool
    expected_dim: int
    bound_N: int
    total_span_dim: int
    classes: Dict[str, ClassDimensions] = {}
