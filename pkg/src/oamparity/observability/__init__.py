"""Logging for oamparity."""

from oamparity.observability.logging import get_logger, setup_logging

__all__ = [
    "get_logger",
    "setup_logging",
]
