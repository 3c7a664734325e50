"""Lightweight YAML loader for the config/ directory.

This helper reads YAML files present in the `config/` directory and exposes a
programmatic `get_config(name)` helper. Values can be overridden from the
environment: ``SUPERCAP_<FILE>_<SECTION>_<KEY>`` replaces ``<key>`` under
``<section>`` of ``<file>.yaml`` (for example
``SUPERCAP_ORACLE_LIMITS_MAX_GENERATORS=6``). Override values are parsed as
YAML scalars so numbers and booleans keep their type.

Note: This module depends on `pyyaml`. If it's not available the functions
will raise an informative ImportError.
"""

from __future__ import annotations

import copy
import glob
import os
from typing import Any, Dict, List, Mapping, Optional

ENV_PREFIX = "SUPERCAP_"


def _yaml():
    try:
        import yaml
    except Exception as exc:  # pragma: no cover - informative
        raise ImportError("PyYAML is required to load config files. Install with `pip install pyyaml`") from exc
    return yaml


def _load_yaml(path: str) -> Dict[str, Any]:
    with open(path, "r", encoding="utf-8") as fh:
        return _yaml().safe_load(fh) or {}


def _resolve(tree: Dict[str, Any], remainder: str) -> Optional[List[str]]:
    """Match an upper-cased ``A_B_C`` remainder against nested keys that may contain underscores."""
    for key in sorted(tree, key=len, reverse=True):
        token = str(key).upper()
        if remainder == token:
            return [key]
        if remainder.startswith(token + "_") and isinstance(tree[key], dict):
            rest = _resolve(tree[key], remainder[len(token) + 1 :])
            if rest is not None:
                return [key] + rest
    return None


def apply_env_overrides(
    name: str, data: Dict[str, Any], environ: Optional[Mapping[str, str]] = None
) -> Dict[str, Any]:
    environ = os.environ if environ is None else environ
    prefix = f"{ENV_PREFIX}{name.upper()}_"
    out = copy.deepcopy(data)
    for var in sorted(environ):
        if not var.startswith(prefix):
            continue
        path = _resolve(out, var[len(prefix) :])
        if path is None:
            continue
        node = out
        for key in path[:-1]:
            node = node[key]
        node[path[-1]] = _yaml().safe_load(environ[var])
    return out


def load_all_configs(config_dir: str = None) -> Dict[str, Dict[str, Any]]:
    config_dir = config_dir or os.path.join(os.path.dirname(__file__))
    result: Dict[str, Dict[str, Any]] = {}
    for path in glob.glob(os.path.join(config_dir, "*.yaml")):
        name = os.path.splitext(os.path.basename(path))[0]
        result[name] = apply_env_overrides(name, _load_yaml(path))
    return result


def get_config(name: str, environ: Optional[Mapping[str, str]] = None) -> Dict[str, Any]:
    """Return the named config (filename without extension).

    Args:
        name: e.g. "oracle", "reproduce", "server"
        environ: mapping consulted for overrides; defaults to ``os.environ``
    """
    config_dir = os.path.join(os.path.dirname(__file__))
    path = os.path.join(config_dir, f"{name}.yaml")
    if not os.path.exists(path):
        raise FileNotFoundError(f"Config file not found: {path}")
    return apply_env_overrides(name, _load_yaml(path), environ)


__all__ = ["load_all_configs", "get_config", "apply_env_overrides", "ENV_PREFIX"]
