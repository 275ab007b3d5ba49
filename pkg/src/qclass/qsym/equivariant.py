"""
Quasisymmetric class functions: QSymExpr with ClassFunction coefficients.

The same object can be read class by class (one QSymExpr per conjugacy
class) or coefficient by coefficient (one class function per composition).
"""
from typing import Any, Sequence

from qclass.core.errors import InvalidInputError
from qclass.groups.class_function import ClassFunction
from qclass.groups.group import PermGroup
from qclass.qsym.expr import QSymExpr


def assemble(group: PermGroup, class_values: Sequence[QSymExpr]) -> QSymExpr:
    """
    Combine one expression per conjugacy class into a quasisymmetric class function.

    Raises:
        InvalidInputError: If the number of values, degrees or bases disagree
    """
    if len(class_values) != len(group.classes):
        raise InvalidInputError(
            f"Expected {len(group.classes)} class values, got {len(class_values)}",
            data={"classes": len(group.classes), "values": len(class_values)}
        )
    first = class_values[0]
    for q in class_values:
        if q.degree != first.degree or q.basis != first.basis:
            raise InvalidInputError("Class values must share degree and basis")
    keys = set().union(*(q.terms for q in class_values))
    return QSymExpr(
        first.degree,
        first.basis,
        {alpha: ClassFunction(group, [q.coefficient(alpha) for q in class_values]) for alpha in keys},
    )


def at_class(q: QSymExpr, class_index: int) -> QSymExpr:
    """The value of a quasisymmetric class function at one conjugacy class."""
    return q.map_coefficients(lambda c: c.at(class_index) if isinstance(c, ClassFunction) else c)


def at_identity(q: QSymExpr) -> QSymExpr:
    return at_class(q, 0)


def by_class(q: QSymExpr, group: PermGroup) -> dict[str, QSymExpr]:
    """Map each class representative (cycle notation) to its expression."""
    return {str(c.representative): at_class(q, c.index) for c in group.classes}


def coefficient_function(q: QSymExpr, alpha: Any, group: PermGroup) -> ClassFunction:
    """[M_α] or [F_α] as a class function, zero when absent."""
    coeff = q.coefficient(alpha)
    return coeff if isinstance(coeff, ClassFunction) else ClassFunction.constant(group, coeff)


def t_coefficient(q: QSymExpr, k: int) -> QSymExpr:
    """[t^k] q, applied to every coefficient."""
    return q.map_coefficients(lambda c: c.t_coefficient(k) if isinstance(c, ClassFunction) else c.coefficient(k))


def t_degree(q: QSymExpr) -> int:
    return max((c.t_degree if isinstance(c, ClassFunction) else c.degree for c in q.terms.values()), default=-1)


def scale_by_class(q: QSymExpr, factor: ClassFunction) -> QSymExpr:
    """Multiply every coefficient by a class function, e.g. the sign character."""
    return q.map_coefficients(lambda c: factor * c)
