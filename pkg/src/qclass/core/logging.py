"""Structured logging infrastructure for qclass.

Log records are emitted as one JSON object per line on stderr, so that
command output on stdout stays machine-readable.
"""

from typing import Any, Iterator, Literal, Optional
from contextlib import contextmanager
from dataclasses import dataclass, asdict
from datetime import datetime, timezone
import json
import logging
import time


@dataclass
class LogEntry:
    """Structured log entry with JSON serialization.

    Attributes:
        level: Log level (debug, info, warn, error)
        component: Logger name that generated the entry
        message: Human-readable log message
        metadata: Optional additional structured data
        timestamp: ISO 8601 formatted timestamp (auto-generated if not provided)
    """
    level: Literal['debug', 'info', 'warn', 'error']
    component: str
    message: str
    metadata: Optional[dict[str, Any]] = None
    timestamp: Optional[str] = None

    def __post_init__(self) -> None:
        if self.timestamp is None:
            self.timestamp = datetime.now(timezone.utc).isoformat()

    def to_json(self) -> str:
        """Convert log entry to a JSON string.

        Metadata values that are not JSON types are rendered with ``str``.
        """
        return json.dumps(asdict(self), default=str)


class JSONFormatter(logging.Formatter):
    """Formatter that renders logging records as LogEntry JSON lines."""

    LEVEL_MAP = {
        logging.DEBUG: 'debug',
        logging.INFO: 'info',
        logging.WARNING: 'warn',
        logging.ERROR: 'error',
        logging.CRITICAL: 'error',
    }

    def format(self, record: logging.LogRecord) -> str:
        """Format a log record as JSON.

        Args:
            record: Python logging record

        Returns:
            JSON-formatted log string
        """
        level = self.LEVEL_MAP.get(record.levelno, 'info')

        metadata = getattr(record, 'metadata', None)
        if record.exc_info:
            metadata = dict(metadata or {})
            metadata['exception'] = self.formatException(record.exc_info)

        log_entry = LogEntry(
            level=level,  # type: ignore[arg-type]
            component=record.name,
            message=record.getMessage(),
            metadata=metadata,
        )

        return log_entry.to_json()


def setup_logging(level: int | str = logging.WARNING) -> None:
    """Configure structured JSON logging for the application.

    Installs a single stderr handler with JSONFormatter on the root logger,
    replacing any handler left by a previous call.

    Args:
        level: Python logging level or level name (default: WARNING)
    """
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            level = logging.WARNING

    root_logger = logging.getLogger()
    root_logger.setLevel(level)

    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    console_handler = logging.StreamHandler()
    console_handler.setLevel(level)
    console_handler.setFormatter(JSONFormatter())

    root_logger.addHandler(console_handler)


def log_with_metadata(
    logger: logging.Logger,
    level: int,
    message: str,
    metadata: Optional[dict[str, Any]] = None
) -> None:
    """Log a message with structured metadata.

    Args:
        logger: Logger instance to use
        level: Python logging level
        message: Log message
        metadata: Optional structured metadata dictionary
    """
    extra = {'metadata': metadata} if metadata is not None else {}
    logger.log(level, message, extra=extra)


@contextmanager
def log_timing(
    logger: logging.Logger,
    message: str,
    metadata: Optional[dict[str, Any]] = None,
    level: int = logging.DEBUG,
) -> Iterator[dict[str, Any]]:
    """Log ``message`` once the block finishes, with its wall time.

    The yielded dictionary is merged into the metadata, so the block can
    attach counts it computed.

    Args:
        logger: Logger instance to use
        message: Log message emitted on exit
        metadata: Initial metadata
        level: Python logging level
    """
    fields: dict[str, Any] = dict(metadata or {})
    start = time.perf_counter()
    try:
        yield fields
    finally:
        fields['elapsed_ms'] = round((time.perf_counter() - start) * 1000.0, 3)
        log_with_metadata(logger, level, message, fields)
