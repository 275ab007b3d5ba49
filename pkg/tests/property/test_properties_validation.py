"""
Property-based tests for input validation and error reports.
"""
import json

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from qclass.core.errors import (
    ConfigurationError,
    IntegrityError,
    InvalidInputError,
    PreconditionError,
    ResourceError,
    format_error_response,
)
from qclass.core.validation import validate_labels, validate_pairs, validate_weights


label_strategy = st.text(
    alphabet=st.characters(whitelist_categories=('Lu', 'Ll', 'Nd'), whitelist_characters='_-'),
    min_size=1,
    max_size=6,
)

labels_strategy = st.lists(label_strategy, min_size=1, max_size=8, unique=True)


@pytest.mark.property
@given(labels=labels_strategy)
@settings(suppress_health_check=[HealthCheck.too_slow])
def test_distinct_labels_accepted(labels) -> None:
    assert validate_labels(labels) == tuple(labels)


@pytest.mark.property
@given(labels=labels_strategy, data=st.data())
@settings(suppress_health_check=[HealthCheck.too_slow])
def test_duplicate_labels_rejected(labels, data) -> None:
    repeated = data.draw(st.sampled_from(labels))
    with pytest.raises(InvalidInputError) as excinfo:
        validate_labels(labels + [repeated])
    assert excinfo.value.data['duplicates'] == [repeated]


@pytest.mark.property
@given(labels=labels_strategy, reserved=st.sampled_from(list("()|, ")))
@settings(suppress_health_check=[HealthCheck.too_slow])
def test_reserved_characters_rejected(labels, reserved) -> None:
    with pytest.raises(InvalidInputError):
        validate_labels([labels[0] + reserved])


@pytest.mark.property
@given(labels=labels_strategy, data=st.data())
@settings(suppress_health_check=[HealthCheck.too_slow])
def test_pairs_over_known_labels(labels, data) -> None:
    pairs = data.draw(st.lists(st.tuples(st.sampled_from(labels), st.sampled_from(labels)), max_size=10))
    assert validate_pairs([list(p) for p in pairs], labels) == tuple(pairs)


@pytest.mark.property
@given(labels=labels_strategy, data=st.data())
@settings(suppress_health_check=[HealthCheck.too_slow])
def test_weights_default_to_one(labels, data) -> None:
    chosen = data.draw(st.lists(st.sampled_from(labels), unique=True))
    weights = {label: data.draw(st.integers(1, 5)) for label in chosen}
    result = validate_weights(weights, labels)
    assert set(result) == set(labels)
    assert all(result[x] == weights.get(x, 1) for x in labels)


@pytest.mark.property
@given(labels=labels_strategy, bad=st.one_of(st.integers(max_value=0), st.booleans(), st.floats(), st.text()))
@settings(suppress_health_check=[HealthCheck.too_slow])
def test_bad_weights_rejected(labels, bad) -> None:
    with pytest.raises(InvalidInputError):
        validate_weights({labels[0]: bad}, labels)


@pytest.mark.property
@given(
    error_class=st.sampled_from([
        InvalidInputError, ConfigurationError, PreconditionError, ResourceError, IntegrityError,
    ]),
    message=st.text(min_size=1, max_size=100),
    data=st.one_of(st.none(), st.dictionaries(st.text(min_size=1, max_size=10), st.integers(), max_size=3)),
)
@settings(suppress_health_check=[HealthCheck.too_slow])
def test_error_reports_carry_code_and_message(error_class, message, data) -> None:
    error = error_class(message, data)
    report = format_error_response(error)

    assert json.loads(json.dumps(report)) == report
    assert report['error']['code'] == error.code
    assert report['error']['type'] == error_class.__name__
    assert report['error']['message'] == message
    assert report['error'].get('data') == data
    assert error.code in (1, 2, 64)
