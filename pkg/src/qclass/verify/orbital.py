"""
Orbital and coeven invariants.

The orbital part of a quasisymmetric class function averages its class
values; the coeven part averages them against the sign of each permutation.
Both are computed by averaging and again as inner products with the trivial
and sign characters, and the two results must agree and be integral: they
count orbits.
"""
import logging
from typing import Any, Callable, Optional, Sequence

from qclass.core.config import LimitsConfig
from qclass.core.errors import IntegrityError, PreconditionError
from qclass.core.models import VerdictReport, Witness
from qclass.digraph.chromatic import bar_chromatic_qcf, chromatic_qcf
from qclass.digraph.graph import Digraph
from qclass.dposet.enumeration import omega_qcf
from qclass.dposet.poset import DoublePoset
from qclass.groups.class_function import ClassFunction, inner_product, sign_character, trivial_character
from qclass.groups.cyclotomic import TPoly
from qclass.groups.group import PermGroup
from qclass.qsym.compare import find_difference
from qclass.qsym.expr import Basis, QSymExpr, signed_antipode
from qclass.qsym.specialization import PolyInBinomials, negate_variable, principal_specialization
from qclass.verify.effectiveness import splittings, is_nonnegative_integral, as_class_function, flawless_pairs
from qclass.verify.oracles import (
    coeven_orbit_oracle,
    coloring_asc,
    d_partitions,
    map_action,
    orbit_count_oracle,
    proper_colorings,
)
from qclass.verify.reciprocity import compare_sequences, report


logger = logging.getLogger(__name__)

Weight = Callable[[Any], int]


def _average(value: Any, group: PermGroup, weight: Weight) -> TPoly:
    cf = as_class_function(value, group)
    total = TPoly()
    for c in group.classes:
        total = total + cf.at(c.index) * (c.size * weight(c.representative))
    return total / group.order


def _project(value: Any, group: PermGroup, character: ClassFunction, weight: Weight, what: str) -> TPoly:
    averaged = _average(value, group, weight)
    projected = inner_product(character, as_class_function(value, group))
    if averaged != projected:
        raise IntegrityError(
            f"{what} by averaging and by inner product disagree",
            data={"average": averaged.to_json(), "inner_product": projected.to_json()}
        )
    if not all(c.is_integer for c in averaged.coeffs):
        raise IntegrityError(
            f"{what} coefficient {averaged} is not an integer",
            data={"value": averaged.to_json()}
        )
    return averaged


def orbital(q: QSymExpr, group: PermGroup) -> QSymExpr:
    """
    (1/|𝔊|) Σ_g q(g).

    Raises:
        IntegrityError: If the two computations disagree or a coefficient is not integral
    """
    trivial = trivial_character(group)
    return q.map_coefficients(lambda c: _project(c, group, trivial, lambda g: 1, "Orbital part"))


def coeven(q: QSymExpr, group: PermGroup) -> QSymExpr:
    """(1/|𝔊|) Σ_g sgn(g) q(g)."""
    sgn = sign_character(group)
    return q.map_coefficients(lambda c: _project(c, group, sgn, lambda g: g.sign, "Coeven part"))


def orbital_sequence(sequence: Sequence[Any], group: PermGroup) -> list[TPoly]:
    trivial = trivial_character(group)
    return [_project(v, group, trivial, lambda g: 1, "Orbital part") for v in sequence]


def coeven_sequence(sequence: Sequence[Any], group: PermGroup) -> list[TPoly]:
    sgn = sign_character(group)
    return [_project(v, group, sgn, lambda g: g.sign, "Coeven part") for v in sequence]


def _four_identities(
    forward: QSymExpr,
    backward: QSymExpr,
    group: PermGroup,
    size: int,
    instance: str,
    names: tuple[str, str],
) -> VerdictReport:
    """
    The orbital/coeven reciprocity identities between ``forward`` and
    ``backward`` (Ω(D) and Ω(D*), or χ and χ̄).
    """
    sign = -1 if size % 2 else 1
    fwd_o, fwd_c = orbital(forward, group), coeven(forward, group)
    back_o, back_c = orbital(backward, group), coeven(backward, group)
    source, target = names
    witness: Optional[Witness] = None
    checks = 0
    for lhs, rhs, label in (
        (fwd_o, back_c, f"(-1)^|N| S {source}^O = {target}^+"),
        (fwd_c, back_o, f"(-1)^|N| S {source}^+ = {target}^O"),
    ):
        checks += 1
        image = signed_antipode(lhs)
        witness = witness or find_difference(image, rhs, None, label)
    for lhs, rhs, label in (
        (fwd_o, back_c, f"(-1)^|N| {source}^O(-n) = {target}^+(n)"),
        (fwd_c, back_o, f"(-1)^|N| {source}^+(-n) = {target}^O(n)"),
    ):
        checks += 1
        left = negate_variable(principal_specialization(lhs)).map(lambda c: c * sign)
        right = principal_specialization(rhs)
        witness = witness or compare_sequences(left.f, right.f, label)
    return report('orbital-reciprocity', instance, witness, checks)


def check_orbital_reciprocity_dposet(
    poset: DoublePoset,
    group: Optional[PermGroup] = None,
    limits: Optional[LimitsConfig] = None,
    instance: str = "double-poset",
) -> VerdictReport:
    """
    The four orbital reciprocity identities between D and D*.

    Raises:
        PreconditionError: If D is not locally special
    """
    if not poset.is_locally_special():
        raise PreconditionError(
            "orbital-reciprocity requires a locally special double poset",
            data={"theorem": "orbital-reciprocity", "elements": list(poset.elements)}
        )
    group = group if group is not None else poset.automorphisms(limits)
    return _four_identities(
        omega_qcf(poset, group, limits),
        omega_qcf(poset.dual(), group, limits),
        group, len(poset), instance, ("Omega(D)", "Omega(D*)"),
    )


def check_orbital_reciprocity_digraph(
    graph: Digraph,
    group: Optional[PermGroup] = None,
    limits: Optional[LimitsConfig] = None,
    instance: str = "digraph",
) -> VerdictReport:
    """The four orbital reciprocity identities between χ and χ̄."""
    group = group if group is not None else graph.automorphisms(limits)
    return _four_identities(
        chromatic_qcf(graph, group, limits),
        bar_chromatic_qcf(graph, group, limits),
        group, len(graph), instance, ("chi", "chi-bar"),
    )


def _first_negative(q: QSymExpr, basis: Basis) -> Optional[Witness]:
    for alpha, coeff in q.to_basis(basis).items():
        if not is_nonnegative_integral(coeff):
            return Witness(composition=list(alpha.parts), lhs=TPoly.coerce(coeff).to_json(),
                           detail=f"{basis.value}{alpha} coefficient is negative")
    return None


def _first_decrease(q: QSymExpr) -> Optional[Witness]:
    m_basis = q.to_basis(Basis.M)
    for alpha in sorted(m_basis.terms):
        for beta in splittings(alpha):
            if not is_nonnegative_integral(TPoly.coerce(m_basis.coefficient(beta)) - m_basis.coefficient(alpha)):
                return Witness(composition=list(beta.parts),
                               lhs=TPoly.coerce(m_basis.coefficient(alpha)).to_json(),
                               rhs=TPoly.coerce(m_basis.coefficient(beta)).to_json(),
                               detail=f"M{alpha} coefficient exceeds M{beta} coefficient")
    return None


def _first_flaw(f: Sequence[Any]) -> Optional[Witness]:
    for i, value in enumerate(f):
        if not is_nonnegative_integral(value):
            return Witness(composition=[i], lhs=TPoly.coerce(value).to_json(), detail=f"f_{i} is negative")
    for i, k in flawless_pairs(len(f) - 1):
        if not is_nonnegative_integral(TPoly.coerce(f[k]) - f[i]):
            return Witness(composition=[i, k], lhs=TPoly.coerce(f[i]).to_json(),
                           rhs=TPoly.coerce(f[k]).to_json(), detail=f"f_{i} exceeds f_{k}")
    return None


def check_orbital_properties(
    q: QSymExpr,
    group: PermGroup,
    positive: bool,
    instance: str = "instance",
) -> VerdictReport:
    """
    The orbital part is M-increasing with a strongly flawless principal
    specialization; with ``positive`` set it is also F-positive and h-positive.

    Coefficients in t are compared one power at a time.
    """
    orbit_q = orbital(q, group)
    poly = principal_specialization(orbit_q)
    witness = _first_decrease(orbit_q) or _first_flaw(poly.f)
    checks = 2
    if positive:
        checks += 2
        witness = witness or _first_negative(orbit_q, Basis.F)
        if witness is None:
            for i, value in enumerate(poly.h_vector()):
                if not is_nonnegative_integral(value):
                    witness = Witness(composition=[i], lhs=TPoly.coerce(value).to_json(),
                                      detail=f"h_{i} is negative")
                    break
    return report('orbital-properties', instance, witness, checks)


def check_orbit_counts_dposet(
    poset: DoublePoset,
    group: Optional[PermGroup] = None,
    max_n: int = 3,
    limits: Optional[LimitsConfig] = None,
    instance: str = "double-poset",
) -> VerdictReport:
    """Orbital and coeven order polynomials at n against direct orbit counts of D-partitions."""
    group = group if group is not None else poset.automorphisms(limits)
    q = omega_qcf(poset, group, limits)
    orbit_poly = PolyInBinomials(q.degree, orbital_sequence(principal_specialization(q).f, group))
    coeven_poly = PolyInBinomials(q.degree, coeven_sequence(principal_specialization(q).f, group))
    act = map_action(poset.elements)
    witness = None
    for n in range(max_n + 1):
        points = d_partitions(poset, n)
        for name, poly, oracle in (
            ('orbital', orbit_poly, orbit_count_oracle),
            ('coeven', coeven_poly, coeven_orbit_oracle),
        ):
            expected = oracle(group, points, act)
            value = poly.evaluate(n)
            if value != expected:
                witness = Witness(composition=[n], lhs=TPoly.coerce(value).to_json(), rhs=expected,
                                  detail=f"{name} order polynomial at n={n} disagrees with orbit count")
                break
        if witness is not None:
            break
    return report('orbit-counts', instance, witness, 2 * (max_n + 1))


def check_orbit_counts_digraph(
    graph: Digraph,
    group: Optional[PermGroup] = None,
    max_n: int = 3,
    limits: Optional[LimitsConfig] = None,
    instance: str = "digraph",
) -> VerdictReport:
    """[t^k] of the orbital and coeven chromatic polynomials at n against orbits of colorings with k ascents."""
    group = group if group is not None else graph.automorphisms(limits)
    q = chromatic_qcf(graph, group, limits)
    f = principal_specialization(q).f
    orbit_poly = PolyInBinomials(q.degree, orbital_sequence(f, group))
    coeven_poly = PolyInBinomials(q.degree, coeven_sequence(f, group))
    act = map_action(graph.vertices)
    witness = None
    for n in range(max_n + 1):
        by_asc: dict[int, list[tuple[int, ...]]] = {}
        for coloring in proper_colorings(graph, n):
            by_asc.setdefault(coloring_asc(graph, coloring), []).append(coloring)
        for name, poly, oracle in (
            ('orbital', orbit_poly, orbit_count_oracle),
            ('coeven', coeven_poly, coeven_orbit_oracle),
        ):
            expected = TPoly([
                oracle(group, by_asc[k], act) if k in by_asc else 0
                for k in range(max(by_asc, default=-1) + 1)
            ])
            value = TPoly.coerce(poly.evaluate(n))
            if value != expected:
                witness = Witness(composition=[n], lhs=value.to_json(polynomial=True),
                                  rhs=expected.to_json(polynomial=True),
                                  detail=f"{name} chromatic polynomial at n={n} disagrees with orbit count")
                break
        if witness is not None:
            break
    return report('orbit-counts', instance, witness, 2 * (max_n + 1))
