"""
Report and plan schemas.

Pydantic models for everything a command prints or a caller inspects:
verification reports, lift plans and dimension checks, recursion audits and
search results.
"""
from haemers.schemas.representation import VertexCheck, VerificationReport
from haemers.schemas.lift import LiftPlan, LiftDimensionReport, ClassDimensions
from haemers.schemas.bounds import AuditEntry, AuditReport
from haemers.schemas.search import SearchConfig, SearchResult

__all__ = [
    "VertexCheck",
    "VerificationReport",
    "LiftPlan",
    "LiftDimensionReport",
    "ClassDimensions",
    "AuditEntry",
    "AuditReport",
    "SearchConfig",
    "SearchResult",
]
