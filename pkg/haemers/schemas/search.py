"""
Schemas for the exhaustive representation search
"""
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from haemers.core.config import settings
from haemers.models.representation import DualRepresentation


class SearchConfig(BaseModel):
    p: int = Field(..., description="prime field size")
    n: int = Field(..., ge=0, description="ambient dimension")
    d: int = Field(..., ge=1, description="local dimension")
    node_budget: int = Field(default_factory=lambda: settings.search_node_budget)
    max_subspaces: int = Field(default_factory=lambda: settings.search_max_subspaces)
    symmetric: bool = Field(False, description="fix the first vertex to the least candidate")


class SearchResult(BaseModel):
    """Exhaustive verdict with the first witness found"""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    found: bool
    witness: Optional[DualRepresentation] = None
    nodes: int = 0
