"""
Schemas for recursion audits
"""
from typing import List

from pydantic import BaseModel, Field


class AuditEntry(BaseModel):
    """One measured intersection against its recursion lower bound"""
    index: str = Field(..., description="base vertex i of M_r(K_m)")
    quantity: str = Field(..., description="table entry, e.g. c_2 or b_1")
    form: str
    bound: str = Field(..., description="form evaluated at (d, n), exact")
    measured: int
    ok: bool


class AuditReport(BaseModel):
    m: int
    r: int
    n: int
    d: int
    entries: List[AuditEntry] = []

    @property
    def violations(self) -> List[AuditEntry]:
        return [entry for entry in self.entries if not entry.ok]

    @property
    def valid(self) -> bool:
        return not self.violations
