"""Resource caps for the exhaustive engines.

Every brute-force sweep (point enumeration, message scans, matrix-group
filters, orbit generation) checks its workload against a cap before starting,
so a typo in parameters fails fast instead of hanging.  Each cap can be raised
or lowered through an environment variable, e.g. AGCODES_MESSAGES_CAP=100000.
"""

from __future__ import annotations

import os

_DEFAULTS = {
    "points": 2**24,
    "messages": 2**26,
    "matrices": 2**24,
    "group": 2**21,
}

_ENV_PREFIX = "AGCODES_"


class CapExceeded(RuntimeError):
    """Raised when a requested exhaustive sweep is larger than its cap."""


def cap(name: str) -> int:
    """Current cap value for one of: points, messages, matrices, group."""
    if name not in _DEFAULTS:
        raise KeyError(f"unknown cap {name!r}")
    raw = os.environ.get(f"{_ENV_PREFIX}{name.upper()}_CAP")
    if raw is None:
        return _DEFAULTS[name]
    value = int(raw)
    if value < 1:
        raise ValueError(f"cap {name} must be positive, got {value}")
    return value


def ensure(name: str, needed: int, what: str) -> None:
    """Raise CapExceeded if `needed` exceeds the configured cap `name`."""
    limit = cap(name)
    if needed > limit:
        raise CapExceeded(
            f"{what} needs {needed} {name}, above the cap {limit} "
            f"(override with {_ENV_PREFIX}{name.upper()}_CAP)"
        )
