"""
Output documents for the command line.

Every command builds a JSON-ready document; ``render`` prints it as
canonical JSON or, with ``--tsv``, as a tab-separated table.
"""
from typing import Any, Optional

from qclass.core.models import VerdictReport
from qclass.groups.character_table import CharacterTable
from qclass.groups.class_function import ClassFunction
from qclass.groups.group import PermGroup
from qclass.qsym.expr import QSymExpr
from qclass.qsym.serialize import encode_coefficient, expr_to_dict, qcf_to_dict, to_canonical_json
from qclass.qsym.specialization import PolyInBinomials


def _cell(value: Any) -> str:
    if isinstance(value, list):
        return "[" + ",".join(_cell(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ",".join(f"{k}:{_cell(v)}" for k, v in sorted(value.items())) + "}"
    if isinstance(value, bool):
        return "true" if value else "false"
    return "" if value is None else str(value)


def _at(value: Any, class_index: int) -> Any:
    return value.at(class_index) if isinstance(value, ClassFunction) else value


def _composition(parts: list[int]) -> str:
    return "(" + ",".join(str(p) for p in parts) + ")"


def expression_document(
    q: QSymExpr,
    group: Optional[PermGroup],
    instance: str,
    polynomial: bool = False,
    **extra: Any,
) -> dict[str, Any]:
    """A class-function table when ``group`` is given, a plain expression otherwise."""
    body = qcf_to_dict(q, group, polynomial) if group is not None else expr_to_dict(q, polynomial)
    return {'instance': instance, **extra, **body}


def poly_document(
    poly: PolyInBinomials,
    group: PermGroup,
    instance: str,
    at: Optional[int] = None,
    polynomial: bool = False,
) -> dict[str, Any]:
    """The f-vector (and optionally p(n)) of a polynomial class function, one row per class."""
    m = group.exponent
    rows = []
    for c in group.classes:
        f = [_at(v, c.index) for v in poly.f]
        row: dict[str, Any] = {
            'class': str(c.representative),
            'size': c.size,
            'f': [encode_coefficient(v, m, polynomial) for v in f],
        }
        if at is not None:
            row['value'] = encode_coefficient(_at(poly.evaluate(at), c.index), m, polynomial)
        rows.append(row)
    document: dict[str, Any] = {'instance': instance, 'degree': poly.degree, 'rows': rows}
    if at is not None:
        document['n'] = at
    return document


def table_document(table: CharacterTable, instance: str) -> dict[str, Any]:
    return {'instance': instance, **table.to_dict()}


def _table_tsv(document: dict[str, Any]) -> list[str]:
    if 'columns' in document:
        header = ['class', 'size'] + [_composition(a) for a in document['columns']]
        lines = ["\t".join(header)]
        for row in document['rows']:
            lines.append("\t".join([row['class'], str(row['size'])] + [_cell(v) for v in row['values']]))
        return lines
    if 'characters' in document:
        classes = document['classes']
        lines = ["\t".join(['character'] + [c['representative'] for c in classes])]
        lines.append("\t".join(['size'] + [str(c['size']) for c in classes]))
        for i, row in enumerate(document['characters']):
            lines.append("\t".join([f"chi_{i}"] + [_cell(v) for v in row]))
        return lines
    if 'rows' in document:
        lines = []
        for row in document['rows']:
            cells = [row['class'], str(row['size'])] + [_cell(v) for v in row['f']]
            if 'value' in row:
                cells.append(_cell(row['value']))
            lines.append("\t".join(cells))
        return lines
    if 'terms' in document:
        return [f"{_composition(t['alpha'])}\t{_cell(t['coeff'])}" for t in document['terms']]
    return [f"{key}\t{_cell(value)}" for key, value in sorted(document.items())]


def to_tsv(document: dict[str, Any]) -> str:
    return "\n".join(_table_tsv(document)) + "\n"


def render(document: Any, tsv: bool = False) -> str:
    """Canonical JSON by default; a tab-separated table with ``tsv``."""
    if isinstance(document, VerdictReport):
        document = document.to_dict()
    return to_tsv(document) if tsv else to_canonical_json(document)
