from core.oracle import OracleLimits


def get_oracle_limits() -> OracleLimits:
    return OracleLimits.from_config()
