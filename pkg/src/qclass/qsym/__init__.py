"""Homogeneous quasisymmetric expressions, specializations and serialization."""

from .expr import Basis, QSymExpr, f_to_m, m_to_f, antipode, reverse, signed_antipode
from .specialization import (
    PolyInBinomials,
    generalized_binomial,
    principal_specialization,
    h_polynomial,
    negate_variable,
    is_unimodal,
)
from .equivariant import (
    assemble,
    at_class,
    at_identity,
    by_class,
    coefficient_function,
    t_coefficient,
    t_degree,
    scale_by_class,
)
from .serialize import encode_coefficient, expr_to_dict, qcf_to_dict, to_canonical_json
from .compare import find_difference

__all__ = [
    'Basis',
    'QSymExpr',
    'f_to_m',
    'm_to_f',
    'antipode',
    'reverse',
    'signed_antipode',
    'PolyInBinomials',
    'generalized_binomial',
    'principal_specialization',
    'h_polynomial',
    'negate_variable',
    'is_unimodal',
    'assemble',
    'at_class',
    'at_identity',
    'by_class',
    'coefficient_function',
    't_coefficient',
    't_degree',
    'scale_by_class',
    'encode_coefficient',
    'expr_to_dict',
    'qcf_to_dict',
    'to_canonical_json',
    'find_difference',
]
