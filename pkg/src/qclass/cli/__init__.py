"""Command-line front end."""

from .commands import THEOREMS, UsageError, build_parser, run
from .render import expression_document, poly_document, render, table_document, to_tsv

__all__ = [
    'THEOREMS',
    'UsageError',
    'build_parser',
    'run',
    'expression_document',
    'poly_document',
    'render',
    'table_document',
    'to_tsv',
]
