from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from core.algebra import LieSuperalgebra


class Coefficient(BaseModel):
    k: int
    num: int
    den: int = 1


class BracketEntry(BaseModel):
    i: int
    j: int
    coeffs: List[Coefficient] = Field(default_factory=list)


class AlgebraPayload(BaseModel):
    """The interchange document (format version 1)."""

    version: int = 1
    name: Optional[str] = None
    dim_even: int = Field(ge=0)
    dim_odd: int = Field(ge=0)
    labels: Optional[List[str]] = None
    brackets: List[BracketEntry] = Field(default_factory=list)

    def to_algebra(self) -> LieSuperalgebra:
        return LieSuperalgebra.from_dict(self.model_dump(exclude_none=True))


class AnalyzeRequest(BaseModel):
    algebra: AlgebraPayload
    oracle: bool = False
    class_bound: Optional[int] = Field(default=None, ge=2)


class AnalyzeResponse(BaseModel):
    results: Dict[str, Any]
