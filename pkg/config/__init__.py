"""YAML configuration for supercap.

``get_config(name)`` returns ``config/<name>.yaml`` with any
``SUPERCAP_<FILE>_<SECTION>_<KEY>`` environment overrides applied.
"""

from .loader import ENV_PREFIX, apply_env_overrides, get_config, load_all_configs

__all__ = ["get_config", "load_all_configs", "apply_env_overrides", "ENV_PREFIX"]
