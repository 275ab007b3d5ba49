"""Exact comparison of quasisymmetric expressions, reporting the first difference."""
from typing import Optional

from qclass.core.models import Witness
from qclass.groups.class_function import ClassFunction
from qclass.groups.group import PermGroup
from qclass.qsym.expr import Basis, QSymExpr
from qclass.qsym.serialize import encode_coefficient


def find_difference(
    lhs: QSymExpr,
    rhs: QSymExpr,
    group: Optional[PermGroup] = None,
    detail: str = "",
) -> Optional[Witness]:
    """
    Compare two expressions in the M basis, class by class.

    Returns:
        None when they agree, else a Witness naming the first composition
        (and class, for class-function coefficients) where they differ
    """
    if lhs.degree != rhs.degree:
        return Witness(lhs=lhs.degree, rhs=rhs.degree, detail=f"{detail}: degrees differ".lstrip(": "))
    a = lhs.to_basis(Basis.M)
    b = rhs.to_basis(Basis.M)
    m = group.exponent if group is not None else None
    for alpha in sorted(set(a.terms) | set(b.terms)):
        x, y = a.coefficient(alpha), b.coefficient(alpha)
        if group is None:
            if x != y:
                return Witness(
                    composition=list(alpha.parts),
                    lhs=encode_coefficient(x),
                    rhs=encode_coefficient(y),
                    detail=detail,
                )
            continue
        left = x if isinstance(x, ClassFunction) else ClassFunction.constant(group, x)
        right = y if isinstance(y, ClassFunction) else ClassFunction.constant(group, y)
        for c in group.classes:
            if left.at(c.index) != right.at(c.index):
                return Witness(
                    class_representative=str(c.representative),
                    composition=list(alpha.parts),
                    lhs=encode_coefficient(left.at(c.index), m),
                    rhs=encode_coefficient(right.at(c.index), m),
                    detail=detail,
                )
    return None
