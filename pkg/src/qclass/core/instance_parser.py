"""
Instance file parser for qclass.

This module reads double-poset and digraph instance files (JSON).
"""
import json
from pathlib import Path
from typing import Any, Optional

from qclass.core.errors import InvalidInputError
from qclass.core.models import InstanceFile
from qclass.core.validation import validate_group_strings, validate_instance_payload


def load_instance(instance_path: str | Path) -> InstanceFile:
    """
    Load and validate an instance file.

    Args:
        instance_path: Path to the instance file

    Returns:
        Parsed InstanceFile

    Raises:
        InvalidInputError: If the file is missing, malformed, or violates the schema
    """
    instance_path = Path(instance_path)

    if not instance_path.exists():
        raise InvalidInputError(
            f"Instance file not found: {instance_path}",
            data={"path": str(instance_path)}
        )

    try:
        with open(instance_path, 'r', encoding='utf-8') as f:
            payload = json.load(f)
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"Invalid JSON in instance file: {e}")
    except OSError as e:
        raise InvalidInputError(f"Failed to read instance file: {e}")

    return parse_instance(payload, default_name=instance_path.stem)


def parse_instance(payload: Any, default_name: Optional[str] = None) -> InstanceFile:
    """
    Validate an instance payload and wrap it as an InstanceFile.

    Args:
        payload: Parsed JSON document
        default_name: Name used when the payload has no "name" key

    Returns:
        Parsed InstanceFile
    """
    kind = validate_instance_payload(payload)
    name = payload.get('name') or default_name or 'instance'
    return InstanceFile(
        kind=kind,  # type: ignore[arg-type]
        payload=dict(payload),
        name=str(name),
        group=validate_group_strings(payload.get('group')),
    )
