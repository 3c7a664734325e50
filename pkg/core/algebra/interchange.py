"""Reading and writing algebras in the JSON interchange format.

Format (version 1)::

    {"version": 1, "name": "H(1,0)", "dim_even": 3, "dim_odd": 0,
     "labels": ["x1", "x2", "z"],
     "brackets": [{"i": 0, "j": 1, "coeffs": [{"k": 2, "num": 1, "den": 1}]}]}

Only brackets with a non-zero value need to be listed. Output is
deterministic: sorted keys, two-space indent.
"""

from __future__ import annotations

import json
import logging
import os
from typing import Union

from core.algebra.lie import LieSuperalgebra
from core.errors import InterchangeError
from utils.json_utils import dumps_canonical, save_json

logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())

PathLike = Union[str, "os.PathLike[str]"]


def loads_algebra(text: str) -> LieSuperalgebra:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InterchangeError(f"invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from exc
    return LieSuperalgebra.from_dict(data)


def dumps_algebra(L: LieSuperalgebra) -> str:
    return dumps_canonical(L.to_dict())


def read_algebra(path: PathLike) -> LieSuperalgebra:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    logger.debug("reading algebra from %s", path)
    return loads_algebra(text)


def write_algebra(L: LieSuperalgebra, path: PathLike) -> None:
    save_json(path, L.to_dict())


__all__ = ["loads_algebra", "dumps_algebra", "read_algebra", "write_algebra"]
