from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from config import get_config
from core.errors import OracleLimitError


@dataclass(frozen=True)
class OracleLimits:
    """Size limits beyond which the oracle refuses to run."""

    max_generators: int = 8
    max_class_bound: int = 5
    max_total_dim: int = 8

    @classmethod
    def from_config(cls, environ: Optional[Mapping[str, str]] = None) -> "OracleLimits":
        limits = get_config("oracle", environ).get("limits", {})
        return cls(
            max_generators=int(limits.get("max_generators", cls.max_generators)),
            max_class_bound=int(limits.get("max_class_bound", cls.max_class_bound)),
            max_total_dim=int(limits.get("max_total_dim", cls.max_total_dim)),
        )

    def check_presentation(self, generators: int, class_bound: int) -> None:
        if generators > self.max_generators:
            raise OracleLimitError(f"{generators} generators exceed the limit of {self.max_generators}")
        if class_bound > self.max_class_bound:
            raise OracleLimitError(f"class bound {class_bound} exceeds the limit of {self.max_class_bound}")

    def check_dim(self, dim: int) -> None:
        if dim > self.max_total_dim:
            raise OracleLimitError(f"dimension {dim} exceeds the oracle limit of {self.max_total_dim}")


def default_verify_stability(environ: Optional[Mapping[str, str]] = None) -> bool:
    return bool(get_config("oracle", environ).get("hopf", {}).get("verify_stability", False))


__all__ = ["OracleLimits", "default_verify_stability"]
