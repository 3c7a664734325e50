"""
core.reports
------------

The report every CLI command and HTTP route returns. Reports are built from
plain JSON values only, so the JSON rendering is byte-identical across runs
on identical input.
"""

from __future__ import annotations

import hashlib
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, Field, model_validator

from core import citations
from utils.json_utils import dumps_canonical


def digest(data: Union[bytes, str]) -> str:
    if isinstance(data, str):
        data = data.encode("utf-8")
    return "sha256:" + hashlib.sha256(data).hexdigest()


class Report(BaseModel):
    command: str
    input_digest: Optional[str] = None
    results: Dict[str, Any] = Field(default_factory=dict)
    comparison: Optional[Dict[str, Any]] = None
    references: Dict[str, str] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _collect_references(self) -> "Report":
        self.references = dict(sorted(citations.references([self.results, self.comparison]).items()))
        return self

    def to_json(self) -> str:
        return dumps_canonical(self.model_dump())

    def to_text(self) -> str:
        lines: List[str] = [f"command: {self.command}"]
        if self.input_digest:
            lines.append(f"input: {self.input_digest}")
        lines.extend(_text_lines(self.results, 0))
        if self.comparison is not None:
            lines.append("comparison:")
            lines.extend(_text_lines(self.comparison, 1))
        if self.references:
            lines.append("references:")
            lines.extend(_text_lines(self.references, 1))
        return "\n".join(lines) + "\n"


def _text_lines(value: Any, depth: int) -> List[str]:
    pad = "  " * depth
    out: List[str] = []
    if isinstance(value, dict):
        for key in sorted(value):
            item = value[key]
            if isinstance(item, (dict, list)) and item:
                out.append(f"{pad}{key}:")
                out.extend(_text_lines(item, depth + 1))
            else:
                out.append(f"{pad}{key}: {_scalar(item)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, dict):
                nested = _text_lines(item, depth + 1)
                out.append(f"{pad}- " + nested[0].strip() if nested else f"{pad}- {{}}")
                out.extend(nested[1:])
            else:
                out.append(f"{pad}- {_scalar(item)}")
    else:
        out.append(f"{pad}{_scalar(value)}")
    return out


def _scalar(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (dict, list)):
        return "{}" if isinstance(value, dict) else "[]"
    return str(value)


__all__ = ["Report", "digest"]
