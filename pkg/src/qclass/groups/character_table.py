"""
Character tables and the decomposition of class functions into irreducibles.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Any, Literal, Optional

from qclass.core.config import LimitsConfig
from qclass.core.config_parser import get_limits
from qclass.core.errors import InvalidInputError, ResourceError
from qclass.groups.class_function import ClassFunction, inner_product
from qclass.groups.cyclotomic import CycNumber, TPoly
from qclass.groups.dixon import dixon_characters
from qclass.groups.group import PermGroup
from qclass.groups.oracle import oracle_characters


logger = logging.getLogger(__name__)

Method = Literal['dixon', 'oracle']


@dataclass(frozen=True)
class CharacterTable:
    """The irreducible characters of a group.

    Attributes:
        group: The owning group
        characters: Irreducible characters, trivial character first, then
            sorted by degree and values
        method: 'dixon' or 'oracle'
    """
    group: PermGroup
    characters: tuple[ClassFunction, ...]
    method: str = 'dixon'

    def __len__(self) -> int:
        return len(self.characters)

    def __getitem__(self, i: int) -> ClassFunction:
        return self.characters[i]

    def __iter__(self):
        return iter(self.characters)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(int(chi.degree.constant().to_fraction()) for chi in self.characters)

    def is_orthonormal(self) -> bool:
        """Whether ⟨χ_i, χ_j⟩ = δ_ij for all pairs."""
        for i, chi in enumerate(self.characters):
            for j, psi in enumerate(self.characters):
                if inner_product(chi, psi) != (1 if i == j else 0):
                    return False
        return True

    def same_as(self, other: 'CharacterTable') -> bool:
        """Row-by-row equality of two tables of the same group."""
        return self.group == other.group and len(self) == len(other) and all(
            a == b for a, b in zip(self.characters, other.characters)
        )

    def to_dict(self) -> dict[str, Any]:
        m = self.group.exponent
        return {
            'order': self.group.order,
            'exponent': m,
            'method': self.method,
            'classes': [
                {'representative': str(c.representative), 'size': c.size}
                for c in self.group.classes
            ],
            'characters': [
                [v.to_json(m) for v in chi.values] for chi in self.characters
            ],
        }


def _row_key(row: list[CycNumber], m: int) -> tuple:
    return (row[0].to_fraction(), tuple(v.sort_key(m) for v in row))


def _canonical(rows: list[list[CycNumber]], m: int) -> list[list[CycNumber]]:
    trivial = [r for r in rows if all(v == 1 for v in r)]
    rest = sorted((r for r in rows if not all(v == 1 for v in r)), key=lambda r: _row_key(r, m))
    return trivial + rest


@lru_cache(maxsize=64)
def _compute(group: PermGroup, method: Method) -> CharacterTable:
    rows = dixon_characters(group) if method == 'dixon' else oracle_characters(group)
    rows = _canonical(rows, group.exponent)
    characters = tuple(ClassFunction(group, row) for row in rows)
    return CharacterTable(group, characters, method)


def character_table(
    group: PermGroup,
    method: Method = 'dixon',
    limits: Optional[LimitsConfig] = None,
) -> CharacterTable:
    """
    Compute (and cache) the character table of ``group``.

    Args:
        group: A permutation group
        method: 'dixon' (exact, modular) or 'oracle' (numpy eigenvectors)
        limits: Size bounds (default: active configuration)

    Raises:
        InvalidInputError: If the method is unknown
        ResourceError: If the group order exceeds the bound for the method
    """
    limits = get_limits(limits)
    if method not in ('dixon', 'oracle'):
        raise InvalidInputError(
            f"Unknown character table method '{method}'",
            data={"method": method, "allowed": ['dixon', 'oracle']}
        )
    bound = limits.max_group_order if method == 'dixon' else limits.oracle_max_order
    if group.order > bound:
        raise ResourceError(
            f"Group of order {group.order} exceeds the {method} bound {bound}",
            data={"order": group.order, "bound": bound, "method": method}
        )
    return _compute(group, method)


class Verdict(str, Enum):
    EFFECTIVE = 'effective'
    VIRTUAL = 'virtual'
    NON_CHARACTER = 'non-character'


@dataclass(frozen=True)
class Decomposition:
    """Multiplicities of the irreducible characters in a class function.

    Attributes:
        verdict: EFFECTIVE when every multiplicity is a polynomial in t with
            nonnegative integer coefficients, VIRTUAL when all are integral
            but some are negative, NON_CHARACTER otherwise
        multiplicities: ⟨χ_i, ψ⟩ per irreducible χ_i, in table order
    """
    verdict: Verdict
    multiplicities: tuple[TPoly, ...]

    @property
    def is_effective(self) -> bool:
        return self.verdict is Verdict.EFFECTIVE

    def to_dict(self) -> dict[str, Any]:
        return {
            'verdict': self.verdict.value,
            'multiplicities': [m.to_json() for m in self.multiplicities],
        }


def decompose(psi: ClassFunction, table: Optional[CharacterTable] = None) -> Decomposition:
    """
    Decompose ψ into irreducible characters, coefficient-wise in t.

    Args:
        psi: Class function with TPoly values
        table: Character table of ψ's group (computed when omitted)
    """
    table = table if table is not None else character_table(psi.group)
    mults = tuple(inner_product(chi, psi) for chi in table.characters)

    verdict = Verdict.EFFECTIVE
    for mult in mults:
        for c in mult.coeffs:
            if not c.is_rational or c.to_fraction().denominator != 1:
                return Decomposition(Verdict.NON_CHARACTER, mults)
            if c.to_fraction() < 0:
                verdict = Verdict.VIRTUAL
    return Decomposition(verdict, mults)


def order_leq(
    chi: ClassFunction,
    psi: ClassFunction,
    table: Optional[CharacterTable] = None,
) -> bool:
    """χ ≤_G ψ: ψ − χ is an effective character."""
    return decompose(psi - chi, table).is_effective


def multiplicity_vector(decomposition: Decomposition) -> list[Fraction]:
    """Constant multiplicities as Fractions (t-free class functions only)."""
    return [m.constant().to_fraction() for m in decomposition.multiplicities]
