"""
Enumerators of D-partitions.

A D-partition is a map f: N → {1, 2, ...} with f(x) ≤ f(y) whenever
x <_1 y, strictly when also y <_2 x. Its level sets, read in increasing
order of value, form a D-set composition; summing monomials over the
D-partitions with a fixed level-set composition C gives M_α(C). Every
enumerator here therefore walks the D-set compositions once.
"""
import logging
from itertools import product
from typing import Any, Iterator, Mapping, Optional

from qclass.combinat.compositions import IntComposition
from qclass.combinat.set_compositions import (
    SetComposition,
    enumerate_set_compositions,
    is_fixed,
)
from qclass.core.config import LimitsConfig
from qclass.core.errors import InvalidInputError
from qclass.core.logging import log_timing
from qclass.core.validation import validate_weights
from qclass.dposet.poset import DoublePoset
from qclass.groups.group import PermGroup
from qclass.groups.permutation import Permutation
from qclass.qsym.equivariant import assemble
from qclass.qsym.expr import Basis, QSymExpr
from qclass.qsym.specialization import PolyInBinomials, principal_specialization


logger = logging.getLogger(__name__)


def d_set_compositions(
    poset: DoublePoset,
    limits: Optional[LimitsConfig] = None,
) -> Iterator[SetComposition]:
    """
    Yield the D-set compositions of a double poset.

    Every prefix union is a ≤_1-ideal and no block contains an inversion.
    Branches are cut as soon as a block breaks either condition.

    Raises:
        ResourceError: If the ground set exceeds ``limits.max_n``
    """
    inverted = {frozenset(pair) for pair in poset.inversions()}

    def accept(block: tuple[str, ...], used: frozenset[str]) -> bool:
        members = used.union(block)
        if any(not poset.below1(y) <= members for y in block):
            return False
        return not any(
            frozenset((x, y)) in inverted
            for i, x in enumerate(block) for y in block[i + 1:]
        )

    return enumerate_set_compositions(poset.elements, accept, limits)


def is_d_set_composition(poset: DoublePoset, composition: SetComposition) -> bool:
    """Whether C is a D-set composition of ``poset``."""
    if composition.ground_set != frozenset(poset.elements):
        return False
    used: set[str] = set()
    for block in composition.blocks:
        used.update(block)
        if not poset.is_ideal(used) or poset.has_inversion(block):
            return False
    return True


def is_d_partition(poset: DoublePoset, f: Mapping[str, int]) -> bool:
    """Whether ``f`` is a D-partition."""
    for x, y in poset.rel1:
        if f[x] > f[y] or (f[x] == f[y] and poset.lt2(y, x)):
            return False
    return True


def _weights(poset: DoublePoset, weights: Optional[Mapping[str, int]]) -> dict[str, int]:
    if weights is None:
        return poset.weights
    return validate_weights(dict(weights), poset.elements)


def weighted_omega(
    poset: DoublePoset,
    weights: Optional[Mapping[str, int]] = None,
    fixed_by: Optional[Permutation] = None,
    limits: Optional[LimitsConfig] = None,
) -> QSymExpr:
    """
    Ω(D, w, x) = Σ_f Π_i x_{f(i)}^{w(i)}, in the M basis.

    With ``fixed_by`` set to g, only the D-partitions constant on the cycles
    of g are counted, which is the value at g of the equivariant enumerator
    when w ≡ 1.

    Args:
        poset: The double poset
        weights: Weight function (default: the weights of ``poset``)
        fixed_by: Optional automorphism restricting to g-invariant partitions
        limits: Size bounds (default: active configuration)

    Raises:
        InvalidInputError: If ``fixed_by`` is not an automorphism preserving the weights
    """
    w = _weights(poset, weights)
    if fixed_by is not None:
        if not poset.is_automorphism(fixed_by) or any(w[fixed_by(x)] != w[x] for x in w):
            raise InvalidInputError(
                f"{fixed_by} is not a weight-preserving automorphism",
                data={"permutation": str(fixed_by)}
            )
    items = (
        (c.weighted_composition(w), 1)
        for c in d_set_compositions(poset, limits)
        if fixed_by is None or is_fixed(fixed_by, c)
    )
    return QSymExpr.from_items(sum(w.values()), Basis.M, items)


def omega(poset: DoublePoset, limits: Optional[LimitsConfig] = None) -> QSymExpr:
    """The ordinary enumerator Ω(D, x) with unit weights."""
    return weighted_omega(poset, {x: 1 for x in poset.elements}, limits=limits)


def omega_at(poset: DoublePoset, g: Permutation, limits: Optional[LimitsConfig] = None) -> QSymExpr:
    """Ω(D, 𝔊, x; g): D-set compositions fixed blockwise by g."""
    return weighted_omega(poset, {x: 1 for x in poset.elements}, g, limits)


def _class_values(
    poset: DoublePoset,
    group: PermGroup,
    weights: dict[str, int],
    limits: Optional[LimitsConfig],
) -> list[QSymExpr]:
    degree = sum(weights.values())
    reps = group.representatives
    counts: list[dict[IntComposition, int]] = [{} for _ in reps]
    total = 0
    for c in d_set_compositions(poset, limits):
        total += 1
        alpha = c.weighted_composition(weights)
        for i, g in enumerate(reps):
            if is_fixed(g, c):
                counts[i][alpha] = counts[i].get(alpha, 0) + 1
    logger.debug("Counted %d D-set compositions over %d classes", total, len(reps))
    return [QSymExpr(degree, Basis.M, terms) for terms in counts]


def _resolve_group(
    poset: DoublePoset,
    group: Optional[PermGroup],
    limits: Optional[LimitsConfig],
) -> PermGroup:
    if group is None:
        return poset.automorphisms(limits)
    if group.domain != poset.elements:
        raise InvalidInputError(
            "Group does not act on the ground set of the double poset",
            data={"domain": list(group.domain), "elements": list(poset.elements)}
        )
    poset.require_symmetry(group)
    return group


def omega_qcf(
    poset: DoublePoset,
    group: Optional[PermGroup] = None,
    limits: Optional[LimitsConfig] = None,
) -> QSymExpr:
    """
    The equivariant enumerator Ω(D, 𝔊, x) as a quasisymmetric class function.

    The coefficient of M_α is the permutation character of 𝔊 on the D-set
    compositions of type α.

    Args:
        poset: The double poset
        group: A subgroup of Aut(D) (default: all of Aut(D))
        limits: Size bounds (default: active configuration)

    Returns:
        M-basis QSymExpr with ClassFunction coefficients

    Raises:
        InvalidInputError: If ``group`` is not contained in Aut(D)
    """
    group = _resolve_group(poset, group, limits)
    unit = {x: 1 for x in poset.elements}
    with log_timing(logger, "Computed equivariant enumerator",
                    {"size": len(poset), "group_order": group.order}):
        return assemble(group, _class_values(poset, group, unit, limits))


def weighted_omega_qcf(
    poset: DoublePoset,
    group: Optional[PermGroup] = None,
    limits: Optional[LimitsConfig] = None,
) -> QSymExpr:
    """Ω(D, w, 𝔊, x) for the weights carried by ``poset``."""
    group = _resolve_group(poset, group, limits)
    return assemble(group, _class_values(poset, group, poset.weights, limits))


def order_poly_cf(
    poset: DoublePoset,
    group: Optional[PermGroup] = None,
    limits: Optional[LimitsConfig] = None,
) -> PolyInBinomials:
    """
    Ω(D, 𝔊, n) = Σ_i f_i binom(n, i) with class-function coefficients f_i.

    Evaluated at n and a class g it counts the g-invariant D-partitions into [n].
    """
    return principal_specialization(omega_qcf(poset, group, limits))


def count_partitions(poset: DoublePoset, n: int, g: Optional[Permutation] = None) -> int:
    """
    Brute-force count of D-partitions N → [n], fixed by g when given.

    Tries all n^|N| maps, for cross-checking the enumerators on small inputs.
    """
    if n < 0:
        raise InvalidInputError(f"n must be nonnegative, got {n}", data={"n": n})
    labels = poset.elements
    count = 0
    for values in product(range(1, n + 1), repeat=len(labels)):
        f = dict(zip(labels, values))
        if g is not None and any(f[g(x)] != f[x] for x in labels):
            continue
        if is_d_partition(poset, f):
            count += 1
    return count


def order_poly_value(poly: PolyInBinomials, n: int, class_index: int = 0) -> int:
    """p(n) at one class, as an integer count."""
    value: Any = poly.evaluate(n)
    if isinstance(value, int):
        return value
    return int(value.at(class_index).constant().to_fraction())
