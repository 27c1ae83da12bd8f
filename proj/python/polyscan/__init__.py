"""Python bindings for the polyscan scan-line polygon repair library."""

from ._polyscan import (
    PolyscanError,
    correct,
    is_simple,
    parse_wkt,
    query,
    report,
    to_wkt,
)

__all__ = [
    "PolyscanError",
    "correct",
    "is_simple",
    "parse_wkt",
    "query",
    "report",
    "to_wkt",
]
