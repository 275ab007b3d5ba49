"""
Chromatic quasisymmetric class functions of digraphs.

χ(G, 𝔊, x) sums t^asc(f) x^f over proper colorings. Grouping colorings by
their ordered color classes, the coefficient of M_α at g counts the g-fixed
set compositions of type α with independent blocks, each weighted by t to
the number of edges running from an earlier block to a later one.

χ̄(G, 𝔊, x) sums t^des(O) x^f over pairs (O, f) of an acyclic orientation
and a coloring weakly increasing along every arc of O.
"""
import logging
from itertools import product
from typing import Iterator, Optional, Sequence

from qclass.combinat.compositions import IntComposition
from qclass.combinat.set_compositions import SetComposition, enumerate_set_compositions, is_fixed
from qclass.core.config import LimitsConfig
from qclass.core.errors import InvalidInputError
from qclass.core.logging import log_timing
from qclass.digraph.graph import Digraph, Orientation
from qclass.groups.cyclotomic import TPoly
from qclass.groups.group import PermGroup
from qclass.groups.permutation import Permutation
from qclass.qsym.equivariant import assemble
from qclass.qsym.expr import Basis, QSymExpr
from qclass.qsym.specialization import PolyInBinomials, principal_specialization


logger = logging.getLogger(__name__)

Tally = dict[IntComposition, list[int]]


def _bump(tally: Tally, alpha: IntComposition, power: int) -> None:
    counts = tally.setdefault(alpha, [])
    if len(counts) <= power:
        counts.extend([0] * (power + 1 - len(counts)))
    counts[power] += 1


def _to_expr(degree: int, tally: Tally) -> QSymExpr:
    return QSymExpr(degree, Basis.M, {alpha: TPoly(counts) for alpha, counts in tally.items()})


def _resolve_group(
    graph: Digraph,
    group: Optional[PermGroup],
    limits: Optional[LimitsConfig],
) -> PermGroup:
    if group is None:
        return graph.automorphisms(limits)
    graph.require_symmetry(group)
    return group


def colorings(graph: Digraph, limits: Optional[LimitsConfig] = None) -> Iterator[SetComposition]:
    """Set compositions of the vertices into independent blocks."""
    edges = graph.edges

    def accept(block: tuple[str, ...], used: frozenset[str]) -> bool:
        members = set(block)
        return not any(u in members and v in members for u, v in edges)

    return enumerate_set_compositions(graph.vertices, accept, limits)


def chromatic_at(
    graph: Digraph,
    g: Optional[Permutation] = None,
    limits: Optional[LimitsConfig] = None,
) -> QSymExpr:
    """χ(G, 𝔊, x; g), or the plain chromatic quasisymmetric function when g is None."""
    if g is not None and not graph.is_automorphism(g):
        raise InvalidInputError(f"{g} is not an automorphism of the digraph", data={"permutation": str(g)})
    tally: Tally = {}
    for c in colorings(graph, limits):
        if g is None or is_fixed(g, c):
            _bump(tally, c.composition, graph.asc_composition(c))
    return _to_expr(len(graph), tally)


def chromatic_qcf(
    graph: Digraph,
    group: Optional[PermGroup] = None,
    limits: Optional[LimitsConfig] = None,
) -> QSymExpr:
    """
    The chromatic quasisymmetric class function χ(G, 𝔊, x).

    Args:
        graph: The digraph
        group: A subgroup of Aut(G) (default: all of Aut(G))
        limits: Size bounds (default: active configuration)

    Returns:
        M-basis QSymExpr whose coefficients are class functions valued in Z[t]

    Raises:
        InvalidInputError: If ``group`` does not act by automorphisms
    """
    group = _resolve_group(graph, group, limits)
    reps = group.representatives
    tallies: list[Tally] = [{} for _ in reps]
    with log_timing(logger, "Computed chromatic class function",
                    {"vertices": len(graph), "group_order": group.order}) as fields:
        seen = 0
        for c in colorings(graph, limits):
            seen += 1
            alpha = c.composition
            power = graph.asc_composition(c)
            for i, g in enumerate(reps):
                if is_fixed(g, c):
                    _bump(tallies[i], alpha, power)
        fields['colorings'] = seen
    return assemble(group, [_to_expr(len(graph), tally) for tally in tallies])


def _weakly_increasing(orientation: Orientation):
    arcs = orientation.arcs

    def accept(block: tuple[str, ...], used: frozenset[str]) -> bool:
        members = used.union(block)
        return all(u in members for u, v in arcs if v in block)

    return accept


def bar_chromatic_qcf(
    graph: Digraph,
    group: Optional[PermGroup] = None,
    limits: Optional[LimitsConfig] = None,
) -> QSymExpr:
    """
    χ̄(G, 𝔊, x): g-fixed pairs (O, C) with C weakly increasing along O.

    Raises:
        InvalidInputError: If ``group`` does not act by automorphisms
    """
    group = _resolve_group(graph, group, limits)
    reps = group.representatives
    tallies: list[Tally] = [{} for _ in reps]
    with log_timing(logger, "Computed bar chromatic class function",
                    {"vertices": len(graph), "group_order": group.order}):
        for orientation in graph.acyclic_orientations(limits):
            power = graph.des(orientation)
            fixing = [i for i, g in enumerate(reps) if orientation.is_fixed(g)]
            for c in enumerate_set_compositions(graph.vertices, _weakly_increasing(orientation), limits):
                alpha = c.composition
                for i in fixing:
                    if is_fixed(reps[i], c):
                        _bump(tallies[i], alpha, power)
    return assemble(group, [_to_expr(len(graph), tally) for tally in tallies])


def chromatic_poly_cf(
    graph: Digraph,
    group: Optional[PermGroup] = None,
    limits: Optional[LimitsConfig] = None,
) -> PolyInBinomials:
    """χ(G, 𝔊, n) in the binomial basis, with class-function coefficients in Z[t]."""
    return principal_specialization(chromatic_qcf(graph, group, limits))


def _maps(labels: Sequence[str], n: int, g: Optional[Permutation]) -> Iterator[dict[str, int]]:
    for values in product(range(1, n + 1), repeat=len(labels)):
        f = dict(zip(labels, values))
        if g is None or all(f[g(x)] == f[x] for x in labels):
            yield f


def count_colorings(graph: Digraph, n: int, g: Optional[Permutation] = None) -> TPoly:
    """Brute force: Σ t^asc(f) over proper colorings V → [n] fixed by g."""
    if n < 0:
        raise InvalidInputError(f"n must be nonnegative, got {n}", data={"n": n})
    total = TPoly()
    for f in _maps(graph.vertices, n, g):
        if all(f[u] != f[v] for u, v in graph.edges):
            total = total + TPoly.t(graph.asc(f))
    return total


def count_proper_colorings(graph: Digraph, n: int) -> int:
    """Proper colorings V → [n] of the underlying undirected graph."""
    if n < 0:
        raise InvalidInputError(f"n must be nonnegative, got {n}", data={"n": n})
    return sum(1 for f in _maps(graph.vertices, n, None) if all(f[u] != f[v] for u, v in graph.edges))


def is_coloring_pattern(graph: Digraph, composition: SetComposition) -> bool:
    """Whether every block of ``composition`` is an independent set."""
    return all(graph.is_independent(block) for block in composition.blocks)
