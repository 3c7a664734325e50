"""HTTP API over the supercap engine; ``python -m api`` serves it."""

from api.main import app

__all__ = ["app"]
