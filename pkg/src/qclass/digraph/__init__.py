"""Digraphs, acyclic orientations and chromatic quasisymmetric class functions."""

from .graph import Digraph, Orientation, orientation_poset
from .chromatic import (
    colorings,
    chromatic_at,
    chromatic_qcf,
    bar_chromatic_qcf,
    chromatic_poly_cf,
    count_colorings,
    count_proper_colorings,
    is_coloring_pattern,
)
from .decomposition import (
    pointwise_sum,
    averaged_sum,
    transversal_sum,
    verify_orientation_decomposition,
)

__all__ = [
    'Digraph',
    'Orientation',
    'orientation_poset',
    'colorings',
    'chromatic_at',
    'chromatic_qcf',
    'bar_chromatic_qcf',
    'chromatic_poly_cf',
    'count_colorings',
    'count_proper_colorings',
    'is_coloring_pattern',
    'pointwise_sum',
    'averaged_sum',
    'transversal_sum',
    'verify_orientation_decomposition',
]
