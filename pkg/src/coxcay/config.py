"""Search caps, overridable through the environment."""
import os

from .errors import ConfigurationError

DEFAULT_MAX_WEIGHT = 64
DEFAULT_MAX_ORBIT = 10**6
DEFAULT_MAX_BALL = 200_000
DEFAULT_MAX_NODES = 10**8


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(f"{name} must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ConfigurationError(f"{name} must be positive, got {value}")
    return value


def max_orbit():
    return _env_int("COXCAY_MAX_ORBIT", DEFAULT_MAX_ORBIT)


def max_ball():
    return _env_int("COXCAY_MAX_BALL", DEFAULT_MAX_BALL)


def max_nodes():
    return _env_int("COXCAY_MAX_NODES", DEFAULT_MAX_NODES)
