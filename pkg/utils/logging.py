import logging
from typing import Optional, Union


def _configured_level() -> str:
    try:
        from config import get_config

        return str(get_config("server").get("logging", {}).get("level", "INFO"))
    except (FileNotFoundError, ImportError):
        return "INFO"


def get_logger(name, level: Optional[Union[int, str]] = None):
    """Logger with the project's stderr handler attached once.

    The level comes from ``logging.level`` in config/server.yaml (overridable
    with ``SUPERCAP_SERVER_LOGGING_LEVEL``) unless ``level`` is given.
    """
    logger = logging.getLogger(name)
    if not logger.handlers:
        handler = logging.StreamHandler()
        formatter = logging.Formatter("%(levelname)s %(name)s %(message)s")
        handler.setFormatter(formatter)
        logger.addHandler(handler)
        logger.setLevel(_configured_level().upper())
    if level is not None:
        logger.setLevel(level.upper() if isinstance(level, str) else level)
    return logger
