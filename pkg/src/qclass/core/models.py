"""
Data models shared across qclass.

This module defines the parsed instance file and the verification report
returned by every theorem checker.
"""
from dataclasses import dataclass, field
from typing import Any, Literal, Optional
import json


@dataclass(frozen=True)
class InstanceFile:
    """A parsed instance file.

    Attributes:
        kind: 'double-poset' or 'digraph'
        payload: The schema-valid JSON object
        name: Instance name (file stem when the payload has none)
        group: Generators in cycle notation, or None for the full automorphism group
    """
    kind: Literal['double-poset', 'digraph']
    payload: dict[str, Any]
    name: str = "instance"
    group: Optional[tuple[str, ...]] = None

    @property
    def labels(self) -> tuple[str, ...]:
        """Ground-set labels of the instance."""
        key = 'elements' if self.kind == 'double-poset' else 'vertices'
        return tuple(self.payload.get(key, []))


@dataclass
class Witness:
    """Evidence that an identity failed.

    Attributes:
        class_representative: Conjugacy-class representative in cycle notation, if any
        composition: Composition (or index) at which the two sides differ, if any
        lhs: JSON-ready left-hand value
        rhs: JSON-ready right-hand value
        detail: Short description of the failing identity
    """
    class_representative: Optional[str] = None
    composition: Optional[list[int]] = None
    lhs: Any = None
    rhs: Any = None
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        """Convert witness to a dictionary."""
        return {
            'class': self.class_representative,
            'composition': self.composition,
            'lhs': self.lhs,
            'rhs': self.rhs,
            'detail': self.detail,
        }


@dataclass
class VerdictReport:
    """Outcome of one theorem checker on one instance.

    Attributes:
        theorem: Identifier of the checked statement
        instance: Short description of the instance
        passed: Whether every identity held
        witness: First failure found (required when passed is False)
        checks: Number of individual identities compared
        details: Extra JSON-ready information (multiplicities, counts, ...)
    """
    theorem: str
    instance: str
    passed: bool
    witness: Optional[Witness] = None
    checks: int = 0
    details: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        """Validate report after initialization."""
        if not self.passed and self.witness is None:
            raise ValueError("A failing verdict must carry a witness")

    @classmethod
    def combine(cls, theorem: str, instance: str, reports: list['VerdictReport']) -> 'VerdictReport':
        """Merge sub-reports; the first failing one supplies the witness."""
        failing = next((r for r in reports if not r.passed), None)
        return cls(
            theorem=theorem,
            instance=instance,
            passed=failing is None,
            witness=failing.witness if failing is not None else None,
            checks=sum(r.checks for r in reports),
            details={r.theorem: r.passed for r in reports},
        )

    def to_dict(self) -> dict[str, Any]:
        """Convert report to a dictionary."""
        result: dict[str, Any] = {
            'theorem': self.theorem,
            'instance': self.instance,
            'passed': self.passed,
            'checks': self.checks,
        }
        if self.witness is not None:
            result['witness'] = self.witness.to_dict()
        if self.details:
            result['details'] = self.details
        return result

    def to_json(self) -> str:
        """Canonical JSON form of the report."""
        return json.dumps(self.to_dict(), sort_keys=True, default=str)
