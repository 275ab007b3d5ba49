"""
Property-based tests for structured logging.
"""
import json
import logging
from io import StringIO

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from qclass.core.logging import JSONFormatter, LogEntry, log_timing, log_with_metadata


metadata_strategy = st.dictionaries(
    keys=st.text(min_size=1, max_size=20),
    values=st.one_of(
        st.text(max_size=50),
        st.integers(),
        st.booleans(),
        st.lists(st.integers(), max_size=5),
    ),
    max_size=5,
)


def _capture(name: str) -> tuple[logging.Logger, StringIO, logging.Handler]:
    logger = logging.getLogger(name)
    logger.setLevel(logging.DEBUG)
    logger.propagate = False
    buffer = StringIO()
    handler = logging.StreamHandler(buffer)
    handler.setFormatter(JSONFormatter())
    logger.addHandler(handler)
    return logger, buffer, handler


@pytest.mark.property
@given(
    level=st.sampled_from(['debug', 'info', 'warn', 'error']),
    component=st.text(min_size=1, max_size=50),
    message=st.text(min_size=1, max_size=200),
    metadata=st.one_of(st.none(), metadata_strategy),
)
@settings(suppress_health_check=[HealthCheck.too_slow])
def test_log_entries_are_valid_json(level, component, message, metadata) -> None:
    """Every LogEntry serializes to a JSON object with the four required fields."""
    parsed = json.loads(LogEntry(level=level, component=component, message=message, metadata=metadata).to_json())

    assert parsed['level'] == level
    assert parsed['component'] == component
    assert parsed['message'] == message
    assert 'T' in parsed['timestamp']
    assert parsed.get('metadata') == metadata


@pytest.mark.property
@given(message=st.text(min_size=1, max_size=100), metadata=metadata_strategy)
@settings(suppress_health_check=[HealthCheck.too_slow])
def test_formatter_keeps_metadata(message, metadata) -> None:
    logger, buffer, handler = _capture('qclass.tests.property.metadata')
    try:
        log_with_metadata(logger, logging.INFO, message, metadata)
        parsed = json.loads(buffer.getvalue().strip())
        assert parsed['message'] == message
        assert parsed['metadata'] == metadata
        assert parsed['component'] == 'qclass.tests.property.metadata'
    finally:
        logger.removeHandler(handler)


@pytest.mark.property
@given(
    messages=st.lists(
        st.tuples(st.sampled_from(['debug', 'info', 'warning', 'error']), st.text(min_size=1, max_size=100)),
        min_size=1,
        max_size=10,
    )
)
@settings(suppress_health_check=[HealthCheck.too_slow])
def test_one_json_object_per_line(messages) -> None:
    logger, buffer, handler = _capture('qclass.tests.property.lines')
    try:
        for level_name, message in messages:
            logger.log(getattr(logging, level_name.upper()), message)
        lines = [line for line in buffer.getvalue().split('\n') if line.strip()]
        assert len(lines) == len(messages)
        for line, (level_name, message) in zip(lines, messages):
            parsed = json.loads(line)
            assert parsed['message'] == message
            assert parsed['level'] == JSONFormatter.LEVEL_MAP[getattr(logging, level_name.upper())]
    finally:
        logger.removeHandler(handler)


@pytest.mark.property
@given(fields=st.dictionaries(st.sampled_from(['count', 'order', 'size']), st.integers(0, 1000), max_size=3))
@settings(suppress_health_check=[HealthCheck.too_slow])
def test_timing_adds_elapsed(fields) -> None:
    logger, buffer, handler = _capture('qclass.tests.property.timing')
    try:
        with log_timing(logger, "done", {"instance": "x"}) as extra:
            extra.update(fields)
        parsed = json.loads(buffer.getvalue().strip())
        assert parsed['metadata']['elapsed_ms'] >= 0
        assert parsed['metadata']['instance'] == "x"
        for key, value in fields.items():
            assert parsed['metadata'][key] == value
    finally:
        logger.removeHandler(handler)
