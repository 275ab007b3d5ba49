"""
Input validation for qclass.

This module checks labels, relation lists, weights and instance payloads
before they reach the combinatorial constructors.
"""
from typing import Any, Iterable, Mapping, Sequence

from .errors import InvalidInputError


INSTANCE_KINDS = ('double-poset', 'digraph')

_DPOSET_KEYS = {'kind', 'name', 'description', 'elements', 'rel1', 'rel2', 'weights', 'group'}
_DIGRAPH_KEYS = {'kind', 'name', 'description', 'vertices', 'edges', 'group'}


def validate_labels(labels: Any, what: str = "elements") -> tuple[str, ...]:
    """
    Validate a list of ground-set labels.

    Args:
        labels: Candidate label list
        what: Field name used in error messages

    Returns:
        The labels as a tuple

    Raises:
        InvalidInputError: If labels are not distinct nonempty strings
    """
    if not isinstance(labels, (list, tuple)):
        raise InvalidInputError(
            f"'{what}' must be a list of labels",
            data={"field": what, "actual_type": type(labels).__name__}
        )

    for label in labels:
        if not isinstance(label, str) or not label:
            raise InvalidInputError(
                f"Invalid label in '{what}': {label!r}",
                data={"field": what, "label": repr(label)}
            )
        if any(ch in label for ch in "()|, \t\n"):
            raise InvalidInputError(
                f"Label '{label}' in '{what}' contains a reserved character",
                data={"field": what, "label": label}
            )

    seen: set[str] = set()
    duplicates: set[str] = set()
    for label in labels:
        if label in seen:
            duplicates.add(label)
        seen.add(label)
    if duplicates:
        raise InvalidInputError(
            f"Duplicate labels in '{what}': {sorted(duplicates)}",
            data={"field": what, "duplicates": sorted(duplicates)}
        )

    return tuple(labels)


def validate_pairs(
    pairs: Any,
    labels: Iterable[str],
    what: str = "relation"
) -> tuple[tuple[str, str], ...]:
    """
    Validate a list of ordered pairs over known labels.

    Args:
        pairs: Candidate list of two-element lists
        labels: Known labels
        what: Field name used in error messages

    Returns:
        The pairs as a tuple of tuples

    Raises:
        InvalidInputError: If a pair is malformed or mentions an unknown label
    """
    if not isinstance(pairs, (list, tuple)):
        raise InvalidInputError(
            f"'{what}' must be a list of pairs",
            data={"field": what, "actual_type": type(pairs).__name__}
        )

    known = set(labels)
    result = []
    for pair in pairs:
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise InvalidInputError(
                f"Malformed pair in '{what}': {pair!r}",
                data={"field": what, "pair": repr(pair)}
            )
        x, y = pair
        for label in (x, y):
            if label not in known:
                raise InvalidInputError(
                    f"Unknown label '{label}' in '{what}'",
                    data={"field": what, "label": repr(label)}
                )
        result.append((x, y))

    return tuple(result)


def validate_weights(weights: Any, labels: Sequence[str]) -> dict[str, int]:
    """
    Validate a weight map; missing labels get weight 1.

    Raises:
        InvalidInputError: If a weight is not a positive integer or a label is unknown
    """
    if weights is None:
        return {label: 1 for label in labels}

    if not isinstance(weights, Mapping):
        raise InvalidInputError(
            "'weights' must be an object mapping labels to positive integers",
            data={"field": "weights"}
        )

    known = set(labels)
    for label, weight in weights.items():
        if label not in known:
            raise InvalidInputError(
                f"Unknown label '{label}' in 'weights'",
                data={"field": "weights", "label": repr(label)}
            )
        if isinstance(weight, bool) or not isinstance(weight, int) or weight <= 0:
            raise InvalidInputError(
                f"Weight of '{label}' must be a positive integer",
                data={"field": "weights", "label": label, "weight": repr(weight)}
            )

    return {label: int(weights.get(label, 1)) for label in labels}


def validate_group_strings(group: Any) -> tuple[str, ...] | None:
    """Validate the optional list of generators in cycle notation."""
    if group is None:
        return None
    if not isinstance(group, (list, tuple)) or not all(isinstance(g, str) for g in group):
        raise InvalidInputError(
            "'group' must be a list of permutations in cycle notation",
            data={"field": "group"}
        )
    return tuple(group)


def infer_instance_kind(payload: Mapping[str, Any]) -> str:
    """Return the instance kind, inferring it from the keys when absent.

    Raises:
        InvalidInputError: If the kind is unknown or cannot be inferred
    """
    kind = payload.get('kind')
    if kind is None:
        if 'elements' in payload:
            kind = 'double-poset'
        elif 'vertices' in payload:
            kind = 'digraph'
    if kind not in INSTANCE_KINDS:
        raise InvalidInputError(
            f"Unknown instance kind: {kind!r}",
            data={"field": "kind", "allowed": list(INSTANCE_KINDS)}
        )
    return kind


def validate_instance_payload(payload: Any) -> str:
    """
    Validate an instance file payload against its schema.

    Args:
        payload: Parsed JSON document

    Returns:
        The instance kind

    Raises:
        InvalidInputError: If the payload violates the schema
    """
    if not isinstance(payload, Mapping):
        raise InvalidInputError(
            "Instance file must contain a JSON object",
            data={"actual_type": type(payload).__name__}
        )

    kind = infer_instance_kind(payload)
    allowed = _DPOSET_KEYS if kind == 'double-poset' else _DIGRAPH_KEYS
    unknown = sorted(set(payload) - allowed)
    if unknown:
        raise InvalidInputError(
            f"Unknown keys for a {kind} instance: {unknown}",
            data={"unknown_fields": unknown}
        )

    if kind == 'double-poset':
        labels = validate_labels(payload.get('elements', []), 'elements')
        validate_pairs(payload.get('rel1', []), labels, 'rel1')
        validate_pairs(payload.get('rel2', []), labels, 'rel2')
        validate_weights(payload.get('weights'), labels)
    else:
        labels = validate_labels(payload.get('vertices', []), 'vertices')
        validate_pairs(payload.get('edges', []), labels, 'edges')
    validate_group_strings(payload.get('group'))

    return kind
