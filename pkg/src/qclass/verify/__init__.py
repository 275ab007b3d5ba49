"""Theorem checkers, orbit oracles and the random-instance harness."""

from .reciprocity import (
    compare_sequences,
    report,
    check_reciprocity_dposet,
    check_reciprocity_digraph,
    check_weighted_reciprocity,
    check_quotient_identity,
    check_reversal_identity,
)
from .effectiveness import (
    as_class_function,
    is_effective,
    leq,
    is_nonnegative_integral,
    splittings,
    flawless_pairs,
    check_F_effective,
    check_M_increasing,
    check_flawless,
    check_h_effective,
    isotypic_component,
    isotypic_sequence,
    check_isotypic_F_positive,
    check_isotypic_flawless,
    trivial_isotypic_h,
    check_trivial_h_unimodal,
)
from .oracles import (
    orbit_count_oracle,
    is_coeven,
    coeven_orbit_oracle,
    map_action,
    d_partitions,
    proper_colorings,
    coloring_asc,
    group_on_itself,
)
from .orbital import (
    orbital,
    coeven,
    orbital_sequence,
    coeven_sequence,
    check_orbital_reciprocity_dposet,
    check_orbital_reciprocity_digraph,
    check_orbital_properties,
    check_orbit_counts_dposet,
    check_orbit_counts_digraph,
)
from .harness import (
    SUITES,
    InstanceResult,
    random_locally_special,
    random_double_poset,
    random_symmetric_double_poset,
    random_digraph,
    random_subgroup,
    run_instance,
    explore_non_locally_special,
    run_selftest,
)

__all__ = [
    'compare_sequences',
    'report',
    'check_reciprocity_dposet',
    'check_reciprocity_digraph',
    'check_weighted_reciprocity',
    'check_quotient_identity',
    'check_reversal_identity',
    'as_class_function',
    'is_effective',
    'leq',
    'is_nonnegative_integral',
    'splittings',
    'flawless_pairs',
    'check_F_effective',
    'check_M_increasing',
    'check_flawless',
    'check_h_effective',
    'isotypic_component',
    'isotypic_sequence',
    'check_isotypic_F_positive',
    'check_isotypic_flawless',
    'trivial_isotypic_h',
    'check_trivial_h_unimodal',
    'orbit_count_oracle',
    'is_coeven',
    'coeven_orbit_oracle',
    'map_action',
    'd_partitions',
    'proper_colorings',
    'coloring_asc',
    'group_on_itself',
    'orbital',
    'coeven',
    'orbital_sequence',
    'coeven_sequence',
    'check_orbital_reciprocity_dposet',
    'check_orbital_reciprocity_digraph',
    'check_orbital_properties',
    'check_orbit_counts_dposet',
    'check_orbit_counts_digraph',
    'SUITES',
    'InstanceResult',
    'random_locally_special',
    'random_double_poset',
    'random_symmetric_double_poset',
    'random_digraph',
    'random_subgroup',
    'run_instance',
    'explore_non_locally_special',
    'run_selftest',
]
