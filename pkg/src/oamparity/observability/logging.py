"""Structured logging configuration."""

import logging
import sys
from typing import Any

import structlog

from oamparity.config.settings import get_settings


def _stderr_logger_factory(*_args: Any) -> structlog.PrintLogger:
    # Resolved per call so redirected streams (test runners, pipes) are honoured.
    return structlog.PrintLogger(file=sys.stderr)


def setup_logging(log_level: str | None = None, colors: bool | None = None) -> None:
    """
    Configure structured logging for the application.

    Log lines always go to standard error; standard output is reserved for CSV.

    Args:
        log_level: Optional override for log level. Uses settings if not provided.
        colors: Force ANSI colors on or off. Defaults to colors when stderr is a TTY.
    """
    settings = get_settings()
    level = log_level or settings.log_level

    # Convert log level string to logging level constant
    log_level_int = getattr(logging, level.upper(), logging.INFO)

    if colors is None:
        colors = sys.stderr.isatty()

    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.StackInfoRenderer(),
            structlog.dev.set_exc_info,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.dev.ConsoleRenderer(colors=colors),
        ],
        wrapper_class=structlog.make_filtering_bound_logger(log_level_int),
        context_class=dict,
        logger_factory=_stderr_logger_factory,
        cache_logger_on_first_use=False,
    )


def get_logger(name: str) -> structlog.typing.FilteringBoundLogger:
    """
    Get a logger instance with the given name.

    Args:
        name: Logger name (typically module name).

    Returns:
        Configured structlog logger.
    """
    return structlog.get_logger(name)  # type: ignore[no-any-return]
