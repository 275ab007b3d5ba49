"""
Unit tests for structured logging.
"""
import json
import logging
from io import StringIO

import pytest

from qclass.core.logging import (
    JSONFormatter,
    LogEntry,
    log_timing,
    log_with_metadata,
    setup_logging,
)


@pytest.fixture
def capture() -> tuple[logging.Logger, StringIO]:
    stream = StringIO()
    handler = logging.StreamHandler(stream)
    handler.setFormatter(JSONFormatter())
    logger = logging.getLogger("qclass.tests.logging")
    logger.handlers = [handler]
    logger.setLevel(logging.DEBUG)
    logger.propagate = False
    return logger, stream


def _records(stream: StringIO) -> list[dict]:
    return [json.loads(line) for line in stream.getvalue().splitlines()]


class TestLogEntry:
    """Tests for LogEntry."""

    def test_timestamp_is_generated(self) -> None:
        entry = LogEntry(level='info', component='qclass', message='hello')
        assert isinstance(entry.timestamp, str)
        assert entry.metadata is None

    def test_to_json(self) -> None:
        entry = LogEntry(level='warn', component='qclass', message='m',
                         metadata={'n': 3}, timestamp='2024-01-01T00:00:00+00:00')

        data = json.loads(entry.to_json())

        assert data == {
            'level': 'warn',
            'component': 'qclass',
            'message': 'm',
            'metadata': {'n': 3},
            'timestamp': '2024-01-01T00:00:00+00:00',
        }

    def test_non_json_metadata_uses_str(self) -> None:
        entry = LogEntry(level='info', component='c', message='m', metadata={'value': (1, 2)})
        assert json.loads(entry.to_json())['metadata'] == {'value': [1, 2]}

        entry = LogEntry(level='info', component='c', message='m', metadata={'value': object})
        assert json.loads(entry.to_json())['metadata']['value'] == str(object)


class TestJSONFormatter:
    """Tests for JSONFormatter."""

    @pytest.mark.parametrize("level,name", [
        (logging.DEBUG, 'debug'),
        (logging.INFO, 'info'),
        (logging.WARNING, 'warn'),
        (logging.ERROR, 'error'),
        (logging.CRITICAL, 'error'),
    ])
    def test_level_mapping(self, capture, level: int, name: str) -> None:
        logger, stream = capture
        logger.log(level, "message")

        assert _records(stream)[0]['level'] == name

    def test_exception_is_attached(self, capture) -> None:
        logger, stream = capture
        try:
            raise RuntimeError("boom")
        except RuntimeError:
            logger.exception("failed")

        record = _records(stream)[0]
        assert record['message'] == "failed"
        assert "RuntimeError: boom" in record['metadata']['exception']


class TestHelpers:
    """Tests for log_with_metadata and log_timing."""

    def test_log_with_metadata(self, capture) -> None:
        logger, stream = capture
        log_with_metadata(logger, logging.INFO, "enumerated", {'count': 14})

        record = _records(stream)[0]
        assert record['component'] == "qclass.tests.logging"
        assert record['metadata'] == {'count': 14}

    def test_log_without_metadata(self, capture) -> None:
        logger, stream = capture
        log_with_metadata(logger, logging.INFO, "plain")

        assert _records(stream)[0]['metadata'] is None

    def test_log_timing_merges_fields(self, capture) -> None:
        logger, stream = capture
        with log_timing(logger, "done", {'n': 4}) as fields:
            fields['orders'] = 24

        metadata = _records(stream)[0]['metadata']
        assert metadata['n'] == 4
        assert metadata['orders'] == 24
        assert metadata['elapsed_ms'] >= 0

    def test_log_timing_logs_on_error(self, capture) -> None:
        logger, stream = capture
        with pytest.raises(ValueError):
            with log_timing(logger, "aborted", level=logging.WARNING):
                raise ValueError("x")

        record = _records(stream)[0]
        assert record['message'] == "aborted"
        assert record['level'] == 'warn'


class TestSetupLogging:
    """Tests for setup_logging."""

    def test_single_handler(self) -> None:
        setup_logging(logging.INFO)
        setup_logging(logging.DEBUG)

        root = logging.getLogger()
        assert len(root.handlers) == 1
        assert isinstance(root.handlers[0].formatter, JSONFormatter)
        assert root.level == logging.DEBUG

    def test_level_name(self) -> None:
        setup_logging("error")
        assert logging.getLogger().level == logging.ERROR

    def test_unknown_level_name_falls_back(self) -> None:
        setup_logging("nonsense")
        assert logging.getLogger().level == logging.WARNING
