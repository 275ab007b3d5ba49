"""Double posets, D-partition enumerators and compatible orders."""

from .poset import DoublePoset, strict_closure
from .enumeration import (
    d_set_compositions,
    is_d_set_composition,
    is_d_partition,
    omega,
    omega_at,
    omega_qcf,
    weighted_omega,
    weighted_omega_qcf,
    order_poly_cf,
    order_poly_value,
    count_partitions,
)
from .compatible import cover_graph, compatible_order, is_compatible, has_increasing_extension

__all__ = [
    'DoublePoset',
    'strict_closure',
    'd_set_compositions',
    'is_d_set_composition',
    'is_d_partition',
    'omega',
    'omega_at',
    'omega_qcf',
    'weighted_omega',
    'weighted_omega_qcf',
    'order_poly_cf',
    'order_poly_value',
    'count_partitions',
    'cover_graph',
    'compatible_order',
    'is_compatible',
    'has_increasing_extension',
]
