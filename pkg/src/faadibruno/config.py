"""Size caps for the enumeration-heavy operations.

Every cap can be raised or lowered at once with the ``FDB_MAX_GRADE``
environment variable, which replaces all grade caps by a single integer (the colour
count cap is not affected).
"""
import os

from .errors import CapExceededError

DEFAULT_CAPS = {
    "partitions": 12,
    "incidence": 9,
    "coproduct": 16,
    "primitives": 6,
    "delta": 8,
    "gamma": 10,
    "embedding": 7,
    "dual_grade": 12,
    "coloured": 7,
    "colours": 3,
}


def cap(name):
    override = os.environ.get("FDB_MAX_GRADE")
    if override and name != "colours":
        return int(override)
    return DEFAULT_CAPS[name]


def check_cap(name, value):
    limit = cap(name)
    if value > limit:
        raise CapExceededError(f"{name}: {value} exceeds cap {limit} (set FDB_MAX_GRADE to override)")
