import pytest

from config import get_config, load_all_configs
from config.loader import _resolve, apply_env_overrides
from core.errors import OracleLimitError
from core.oracle import OracleLimits, default_verify_stability
from core.reproduction import Settings


def test_shipped_configs():
    configs = load_all_configs()
    assert {"oracle", "reproduce", "server"} <= set(configs)
    assert get_config("oracle", {})["limits"] == {"max_generators": 8, "max_class_bound": 5, "max_total_dim": 8}


def test_missing_config():
    with pytest.raises(FileNotFoundError):
        get_config("nonexistent", {})


def test_resolve_keys_with_underscores():
    tree = {"limits": {"max_generators": 8, "max": 1}, "hopf": {"verify_stability": False}}
    assert _resolve(tree, "LIMITS_MAX_GENERATORS") == ["limits", "max_generators"]
    assert _resolve(tree, "LIMITS_MAX") == ["limits", "max"]
    assert _resolve(tree, "HOPF_VERIFY_STABILITY") == ["hopf", "verify_stability"]
    assert _resolve(tree, "HOPF_OTHER") is None


def test_overrides_keep_their_type():
    data = {"limits": {"max_generators": 8}, "hopf": {"verify_stability": False}}
    environ = {
        "SUPERCAP_ORACLE_LIMITS_MAX_GENERATORS": "6",
        "SUPERCAP_ORACLE_HOPF_VERIFY_STABILITY": "true",
        "SUPERCAP_ORACLE_UNKNOWN_KEY": "1",
        "SUPERCAP_SERVER_LOGGING_LEVEL": "DEBUG",
    }
    out = apply_env_overrides("oracle", data, environ)
    assert out == {"limits": {"max_generators": 6}, "hopf": {"verify_stability": True}}
    assert data["limits"]["max_generators"] == 8


def test_oracle_limits_from_config():
    assert OracleLimits.from_config({}) == OracleLimits(8, 5, 8)
    limits = OracleLimits.from_config({"SUPERCAP_ORACLE_LIMITS_MAX_TOTAL_DIM": "5"})
    assert limits.max_total_dim == 5
    with pytest.raises(OracleLimitError):
        limits.check_dim(6)
    with pytest.raises(OracleLimitError):
        limits.check_presentation(9, 3)
    with pytest.raises(OracleLimitError):
        limits.check_presentation(2, 6)


def test_verify_stability_default():
    assert default_verify_stability({}) is False
    assert default_verify_stability({"SUPERCAP_ORACLE_HOPF_VERIFY_STABILITY": "true"}) is True


def test_reproduction_settings_from_config():
    assert Settings.from_config({}) == Settings()
    settings = Settings.from_config({"SUPERCAP_REPRODUCE_REPRODUCE_JOBS": "3"})
    assert settings.jobs == 3
