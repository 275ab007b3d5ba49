"""
The orientation decomposition of the chromatic class function.

Every proper coloring f of G determines the acyclic orientation O pointing
each edge from its larger to its smaller color, and f is then exactly a
P_O-partition. Three forms of the resulting identity are checked:

1. at each g: χ(G; g) = Σ_{O fixed by g} t^des(O) Ω(P_O; g)
2. χ(G, 𝔊) = Σ_{O} t^des(O) / |𝔊·O| · Ind_{𝔊_O}^{𝔊} Ω(P_O, 𝔊_O)
3. χ(G, 𝔊) = Σ_{O ∈ T} t^des(O) Ind_{𝔊_O}^{𝔊} Ω(P_O, 𝔊_O) for a transversal T

The left side is always computed by ``chromatic_qcf`` and never through
orientations.
"""
import logging
from fractions import Fraction
from typing import Optional

from qclass.core.config import LimitsConfig
from qclass.core.logging import log_with_metadata
from qclass.core.models import VerdictReport
from qclass.digraph.chromatic import chromatic_qcf
from qclass.digraph.graph import Digraph, Orientation, orientation_poset
from qclass.dposet.enumeration import omega_at, omega_qcf
from qclass.groups.class_function import induce
from qclass.groups.cyclotomic import TPoly
from qclass.groups.group import PermGroup
from qclass.groups.orbits import orbits
from qclass.qsym.compare import find_difference
from qclass.qsym.equivariant import assemble
from qclass.qsym.expr import Basis, QSymExpr


logger = logging.getLogger(__name__)

THEOREM = 'orientation-decomposition'


def _induced_term(
    graph: Digraph,
    orientation: Orientation,
    group: PermGroup,
    limits: Optional[LimitsConfig],
) -> QSymExpr:
    """t^des(O) Ind_{𝔊_O}^{𝔊} Ω(P_O, 𝔊_O)."""
    stabilizer = group.stabilizer(orientation.is_fixed, limits)
    local = omega_qcf(orientation_poset(orientation), stabilizer, limits)
    weight = TPoly.t(graph.des(orientation))
    return local.map_coefficients(lambda c: induce(c, group) * weight)


def pointwise_sum(graph: Digraph, group: PermGroup, limits: Optional[LimitsConfig] = None) -> QSymExpr:
    """Form 1, one class representative at a time."""
    found = graph.acyclic_orientations(limits)
    values = []
    for g in group.representatives:
        total = QSymExpr.zero(len(graph), Basis.M)
        for orientation in found:
            if orientation.is_fixed(g):
                weight = TPoly.t(graph.des(orientation))
                total = total + omega_at(orientation_poset(orientation), g, limits) * weight
        values.append(total)
    return assemble(group, values)


def averaged_sum(graph: Digraph, group: PermGroup, limits: Optional[LimitsConfig] = None) -> QSymExpr:
    """Form 2, summing over every acyclic orientation."""
    found = graph.acyclic_orientations(limits)
    size = {o: len(orbit) for orbit in orbits(group, found, lambda g, o: o.act(g)) for o in orbit}
    total = QSymExpr.zero(len(graph), Basis.M)
    for orientation in found:
        total = total + _induced_term(graph, orientation, group, limits) * Fraction(1, size[orientation])
    return total


def transversal_sum(graph: Digraph, group: PermGroup, limits: Optional[LimitsConfig] = None) -> QSymExpr:
    """Form 3, one orientation per orbit."""
    found = graph.acyclic_orientations(limits)
    total = QSymExpr.zero(len(graph), Basis.M)
    for orbit in orbits(group, found, lambda g, o: o.act(g)):
        total = total + _induced_term(graph, min(orbit, key=lambda o: o.arcs), group, limits)
    return total


def verify_orientation_decomposition(
    graph: Digraph,
    group: Optional[PermGroup] = None,
    limits: Optional[LimitsConfig] = None,
    instance: str = "digraph",
) -> VerdictReport:
    """
    Compare χ(G, 𝔊) against the three orientation sums.

    Returns:
        A VerdictReport whose witness names the first failing form, class and
        composition
    """
    if group is None:
        group = graph.automorphisms(limits)
    lhs = chromatic_qcf(graph, group, limits)
    reports = []
    for name, build in (
        ('pointwise', pointwise_sum),
        ('averaged', averaged_sum),
        ('transversal', transversal_sum),
    ):
        rhs = build(graph, group, limits)
        witness = find_difference(lhs, rhs, group, f"{THEOREM} ({name})")
        reports.append(VerdictReport(
            theorem=f"{THEOREM}:{name}",
            instance=instance,
            passed=witness is None,
            witness=witness,
            checks=len(group.classes) * max(len(lhs.terms), len(rhs.terms), 1),
        ))
    report = VerdictReport.combine(THEOREM, instance, reports)
    log_with_metadata(
        logger, logging.INFO if report.passed else logging.WARNING,
        "Checked orientation decomposition",
        {"instance": instance, "passed": report.passed, "group_order": group.order}
    )
    return report
