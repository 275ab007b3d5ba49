"""
Canonical JSON forms of quasisymmetric expressions and class functions.

Plain expressions serialize as {"degree", "basis", "terms": [{"alpha",
"coeff"}]} with terms in composition order. Quasisymmetric class functions
serialize as a table: one row per conjugacy-class representative, one column
per composition.
"""
import json
from fractions import Fraction
from typing import Any, Optional

from qclass.groups.class_function import ClassFunction
from qclass.groups.cyclotomic import CycNumber, TPoly, encode_rational
from qclass.groups.group import PermGroup
from qclass.qsym.equivariant import at_class
from qclass.qsym.expr import QSymExpr


def encode_coefficient(coeff: Any, m: Optional[int] = None, polynomial: bool = False) -> Any:
    """
    JSON value of a coefficient.

    Rationals become ints or "p/q"; irrational cyclotomic numbers become
    coefficient lists over powers of ζ_m; t-polynomials become lists of
    those, lowest power first (constants collapse unless ``polynomial``).
    """
    if isinstance(coeff, ClassFunction):
        return coeff.to_json(polynomial)
    if isinstance(coeff, TPoly):
        return coeff.to_json(m, polynomial)
    if isinstance(coeff, CycNumber):
        return coeff.to_json(m)
    if isinstance(coeff, (int, Fraction)):
        value = encode_rational(Fraction(coeff))
        return [value] if polynomial else value
    raise TypeError(f"Cannot serialize coefficient of type {type(coeff).__name__}")


def expr_to_dict(q: QSymExpr, polynomial: bool = False) -> dict[str, Any]:
    return {
        'degree': q.degree,
        'basis': q.basis.value,
        'terms': [
            {'alpha': list(alpha.parts), 'coeff': encode_coefficient(coeff, polynomial=polynomial)}
            for alpha, coeff in q.items()
        ],
    }


def qcf_to_dict(q: QSymExpr, group: PermGroup, polynomial: bool = False) -> dict[str, Any]:
    """Table form of a quasisymmetric class function."""
    columns = sorted(q.terms)
    m = group.exponent
    rows = []
    for c in group.classes:
        value = at_class(q, c.index)
        rows.append({
            'class': str(c.representative),
            'size': c.size,
            'values': [encode_coefficient(value.coefficient(a), m, polynomial) for a in columns],
        })
    return {
        'degree': q.degree,
        'basis': q.basis.value,
        'group_order': group.order,
        'columns': [list(alpha.parts) for alpha in columns],
        'rows': rows,
    }


def to_canonical_json(document: Any) -> str:
    """Byte-stable JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
