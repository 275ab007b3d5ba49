"""Integer compositions, set compositions and the refinement order."""

from .compositions import (
    IntComposition,
    composition_to_subset,
    subset_to_composition,
    refines,
    compositions_of,
)
from .set_compositions import (
    SetComposition,
    coarsen_to_type,
    enumerate_set_compositions,
    act,
    is_fixed,
)

__all__ = [
    'IntComposition',
    'composition_to_subset',
    'subset_to_composition',
    'refines',
    'compositions_of',
    'SetComposition',
    'coarsen_to_type',
    'enumerate_set_compositions',
    'act',
    'is_fixed',
]
