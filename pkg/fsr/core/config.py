import logging
import os

from dotenv import load_dotenv

from .constants import (
    DEFAULT_LOG_LEVEL,
    DEFAULT_MAX_DEGREE,
    DEFAULT_MAX_E,
    DEFAULT_MAX_N,
    DEFAULT_MAX_P,
    ENV_LOG_LEVEL,
    ENV_ORACLE_BUDGET,
)
from .exceptions import InputError

load_dotenv()

BUDGET_FIELDS = ("max_n", "max_p", "max_e", "max_degree")


def budget_settings() -> dict[str, int]:
    """Oracle budget limits, with FSR_ORACLE_BUDGET applied on top of the defaults.

    The variable holds comma separated ``key=value`` pairs, e.g. ``max_n=5,max_e=3``.
    Keys that are not given keep their default.
    """
    settings = {
        "max_n": DEFAULT_MAX_N,
        "max_p": DEFAULT_MAX_P,
        "max_e": DEFAULT_MAX_E,
        "max_degree": DEFAULT_MAX_DEGREE,
    }
    raw = os.getenv(ENV_ORACLE_BUDGET, "").strip()
    if not raw:
        return settings

    for item in raw.split(","):
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in BUDGET_FIELDS:
            raise InputError(f"Bad {ENV_ORACLE_BUDGET} entry '{item}'; expected one of {', '.join(BUDGET_FIELDS)}.")
        try:
            settings[key] = int(value.strip())
        except ValueError as e:
            raise InputError(f"Bad {ENV_ORACLE_BUDGET} value for {key}: '{value}'.") from e
        if settings[key] < 0:
            raise InputError(f"Bad {ENV_ORACLE_BUDGET} value for {key}: must be non-negative.")
    return settings


def log_level(verbose: bool = False) -> int:
    """Logging level for the command line front end."""
    if verbose:
        return logging.DEBUG
    name = os.getenv(ENV_LOG_LEVEL, DEFAULT_LOG_LEVEL).upper()
    level = logging.getLevelName(name)
    return level if isinstance(level, int) else logging.WARNING
