"""Permutation groups, cyclotomic class functions and character tables."""

from .permutation import Permutation
from .group import ConjugacyClass, PermGroup, generate, parse_group, symmetric_group
from .cyclotomic import CycNumber, TPoly, cyclotomic_coefficients, cyclotomic_modulus
from .orbits import UnionFind, orbits
from .class_function import (
    ClassFunction,
    trivial_character,
    sign_character,
    regular_character,
    permutation_character,
    inner_product,
    restrict,
    induce,
    orbit_count,
)
from .character_table import (
    CharacterTable,
    Decomposition,
    Verdict,
    character_table,
    decompose,
    order_leq,
    multiplicity_vector,
)

__all__ = [
    'Permutation',
    'ConjugacyClass',
    'PermGroup',
    'generate',
    'parse_group',
    'symmetric_group',
    'CycNumber',
    'TPoly',
    'cyclotomic_coefficients',
    'cyclotomic_modulus',
    'UnionFind',
    'orbits',
    'ClassFunction',
    'trivial_character',
    'sign_character',
    'regular_character',
    'permutation_character',
    'inner_product',
    'restrict',
    'induce',
    'orbit_count',
    'CharacterTable',
    'Decomposition',
    'Verdict',
    'character_table',
    'decompose',
    'order_leq',
    'multiplicity_vector',
]
