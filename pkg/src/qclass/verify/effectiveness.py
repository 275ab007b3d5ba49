"""
Effectiveness decisions for quasisymmetric and polynomial class functions.

A class function is effective when it is a character, that is every
irreducible occurs with a nonnegative integer multiplicity; with t-valued
coefficients this is required of every power of t. ψ ≤_𝔊 χ means χ − ψ is
effective.
"""
import logging
from typing import Any, Optional, Sequence

from qclass.combinat.compositions import IntComposition, compositions_of
from qclass.core.models import VerdictReport, Witness
from qclass.groups.character_table import CharacterTable, character_table, decompose
from qclass.groups.class_function import ClassFunction, inner_product, trivial_character
from qclass.groups.cyclotomic import TPoly
from qclass.groups.group import PermGroup
from qclass.qsym.equivariant import coefficient_function
from qclass.qsym.expr import Basis, QSymExpr
from qclass.qsym.specialization import PolyInBinomials, is_unimodal
from qclass.verify.reciprocity import report


logger = logging.getLogger(__name__)


def as_class_function(value: Any, group: PermGroup) -> ClassFunction:
    return value if isinstance(value, ClassFunction) else ClassFunction.constant(group, value)


def _table(group: PermGroup, table: Optional[CharacterTable]) -> CharacterTable:
    return table if table is not None else character_table(group)


def _witness(psi: ClassFunction, table: CharacterTable, detail: str, index: Optional[list[int]] = None) -> Witness:
    decomposition = decompose(psi, table)
    return Witness(
        composition=index,
        lhs=decomposition.to_dict(),
        rhs=decomposition.verdict.value,
        detail=detail,
    )


def is_effective(psi: ClassFunction, table: Optional[CharacterTable] = None) -> bool:
    return decompose(psi, _table(psi.group, table)).is_effective


def leq(chi: Any, psi: Any, group: PermGroup, table: Optional[CharacterTable] = None) -> bool:
    """χ ≤_𝔊 ψ for class functions or scalars."""
    return is_effective(as_class_function(psi, group) - as_class_function(chi, group), table)


def check_F_effective(
    q: QSymExpr,
    group: PermGroup,
    table: Optional[CharacterTable] = None,
    instance: str = "instance",
) -> VerdictReport:
    """Every F-coefficient is an effective character."""
    table = _table(group, table)
    f_basis = q.to_basis(Basis.F)
    for alpha, coeff in f_basis.items():
        psi = as_class_function(coeff, group)
        if not is_effective(psi, table):
            return report('f-effective', instance,
                          _witness(psi, table, f"[F{alpha}] is not effective", list(alpha.parts)),
                          len(f_basis.terms))
    return report('f-effective', instance, None, len(f_basis.terms))


def splittings(alpha: IntComposition) -> list[IntComposition]:
    """Compositions obtained by splitting one part of α in two."""
    result = []
    parts = alpha.parts
    for i, p in enumerate(parts):
        for j in range(1, p):
            result.append(IntComposition(parts[:i] + (j, p - j) + parts[i + 1:]))
    return result


def check_M_increasing(
    q: QSymExpr,
    group: PermGroup,
    table: Optional[CharacterTable] = None,
    instance: str = "instance",
) -> VerdictReport:
    """
    [M_α] ≤_𝔊 [M_β] whenever β refines α.

    Comparing along cover relations suffices since ≤_𝔊 is transitive.
    """
    table = _table(group, table)
    m_basis = q.to_basis(Basis.M)
    checks = 0
    for alpha in compositions_of(m_basis.degree):
        low = coefficient_function(m_basis, alpha, group)
        for beta in splittings(alpha):
            checks += 1
            high = coefficient_function(m_basis, beta, group)
            if not is_effective(high - low, table):
                return report('m-increasing', instance, _witness(
                    high - low, table, f"[M{alpha}] is not below [M{beta}]", list(beta.parts)
                ), checks)
    return report('m-increasing', instance, None, checks)


def flawless_pairs(d: int) -> list[tuple[int, int]]:
    """Index pairs (i, k) with f_i ≤ f_k required: k = i+1 for i ≤ (d−1)/2, k = d−i for i ≤ d/2."""
    pairs = [(i, i + 1) for i in range(d) if 2 * i <= d - 1]
    pairs += [(i, d - i) for i in range(d + 1) if 2 * i <= d and i != d - i]
    return pairs


def check_flawless(
    sequence: Sequence[Any],
    group: PermGroup,
    table: Optional[CharacterTable] = None,
    instance: str = "instance",
    theorem: str = 'flawless',
) -> VerdictReport:
    """Effective flawlessness of (f_0, ..., f_d): effective entries and both inequality families."""
    table = _table(group, table)
    values = [as_class_function(v, group) for v in sequence]
    d = len(values) - 1
    checks = 0
    for i, value in enumerate(values):
        checks += 1
        if not is_effective(value, table):
            return report(theorem, instance, _witness(value, table, f"entry {i} is not effective", [i]), checks)
    for i, k in flawless_pairs(d):
        checks += 1
        gap = values[k] - values[i]
        if not is_effective(gap, table):
            return report(theorem, instance, _witness(gap, table, f"entry {i} is not below entry {k}", [i, k]), checks)
    return report(theorem, instance, None, checks)


def check_h_effective(
    poly: PolyInBinomials,
    group: PermGroup,
    table: Optional[CharacterTable] = None,
    instance: str = "instance",
) -> VerdictReport:
    """Every entry of the h-vector, computed from values of p, is effective."""
    table = _table(group, table)
    h = poly.h_vector()
    for i, value in enumerate(h):
        psi = as_class_function(value, group)
        if not is_effective(psi, table):
            return report('h-effective', instance, _witness(psi, table, f"h_{i} is not effective", [i]), i + 1)
    return report('h-effective', instance, None, len(h))


def isotypic_component(q: QSymExpr, psi: ClassFunction) -> QSymExpr:
    """⟨ψ, q⟩ applied to every coefficient."""
    return q.map_coefficients(lambda c: inner_product(psi, as_class_function(c, psi.group)))


def isotypic_sequence(sequence: Sequence[Any], psi: ClassFunction) -> list[TPoly]:
    return [inner_product(psi, as_class_function(v, psi.group)) for v in sequence]


def is_nonnegative_integral(value: Any) -> bool:
    poly = TPoly.coerce(value)
    return all(c.is_integer and c.to_fraction() >= 0 for c in poly.coeffs)


def check_isotypic_F_positive(
    q: QSymExpr,
    group: PermGroup,
    table: Optional[CharacterTable] = None,
    instance: str = "instance",
) -> VerdictReport:
    """For every irreducible ψ, ⟨ψ, q⟩ has nonnegative integer F-coefficients."""
    table = _table(group, table)
    checks = 0
    for index, chi in enumerate(table.characters):
        component = isotypic_component(q, chi).to_basis(Basis.F)
        for alpha, coeff in component.items():
            checks += 1
            if not is_nonnegative_integral(coeff):
                return report('isotypic', instance, Witness(
                    composition=list(alpha.parts),
                    lhs=TPoly.coerce(coeff).to_json(),
                    rhs=index,
                    detail=f"<chi_{index}, q> has a negative F{alpha} coefficient",
                ), checks)
    return report('isotypic', instance, None, checks)


def check_isotypic_flawless(
    poly: PolyInBinomials,
    group: PermGroup,
    table: Optional[CharacterTable] = None,
    instance: str = "instance",
    h_positive: bool = True,
) -> VerdictReport:
    """
    For every irreducible ψ, ⟨ψ, p⟩ is strongly flawless and, when
    ``h_positive`` is set, has a nonnegative h-vector.
    """
    table = _table(group, table)
    checks = 0
    d = poly.degree
    for index, chi in enumerate(table.characters):
        f = isotypic_sequence(poly.f, chi)
        sequences = [('f', f)]
        if h_positive:
            sequences.append(('h', isotypic_sequence(poly.h_vector(), chi)))
        for name, seq in sequences:
            for i, value in enumerate(seq):
                checks += 1
                if not is_nonnegative_integral(value):
                    return report('isotypic', instance, Witness(
                        composition=[i], lhs=value.to_json(), rhs=index,
                        detail=f"<chi_{index}, {name}_{i}> is not a nonnegative integer",
                    ), checks)
        for i, k in flawless_pairs(d):
            checks += 1
            if not is_nonnegative_integral(f[k] - f[i]):
                return report('isotypic', instance, Witness(
                    composition=[i, k], lhs=f[i].to_json(), rhs=f[k].to_json(),
                    detail=f"<chi_{index}, f_{i}> exceeds <chi_{index}, f_{k}>",
                ), checks)
    return report('isotypic', instance, None, checks)


def trivial_isotypic_h(poly: PolyInBinomials, group: PermGroup) -> list[TPoly]:
    """Multiplicities of the trivial character in the h-vector."""
    return isotypic_sequence(poly.h_vector(), trivial_character(group))


def check_trivial_h_unimodal(
    poly: PolyInBinomials,
    group: PermGroup,
    instance: str = "instance",
) -> VerdictReport:
    """Unimodality of the trivial-isotypic h-vector, which can fail."""
    h = trivial_isotypic_h(poly, group)
    values = [c.constant().to_fraction() for c in h]
    unimodal = is_unimodal(values)
    witness = None if unimodal else Witness(
        lhs=[str(v) for v in values], detail="trivial-isotypic h-vector is not unimodal"
    )
    return report('h-unimodal', instance, witness, len(values), sequence=[str(v) for v in values])
