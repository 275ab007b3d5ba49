"""
D-compatible linear orders of locally special double posets.

A linear order ℓ of N is D-compatible when, for every pair of ≤_1-ideals
I ⊆ J, ℓ restricted to J∖I is a ≤_1-linear extension exactly when J∖I
contains no inversion.
"""
import logging
from typing import Iterable, Optional, Sequence

import networkx as nx

from qclass.core.config import LimitsConfig
from qclass.core.config_parser import get_limits
from qclass.core.errors import IntegrityError, InvalidInputError, PreconditionError, ResourceError
from qclass.dposet.poset import DoublePoset


logger = logging.getLogger(__name__)


def cover_graph(poset: DoublePoset) -> nx.DiGraph:
    """
    The Hasse diagram of ≤_1 with every cover x ≺_1 y pointing x -> y
    when x ≤_2 y and y -> x otherwise.
    """
    graph = nx.DiGraph()
    graph.add_nodes_from(poset.elements)
    for x, y in poset.covers1:
        if poset.leq2(x, y):
            graph.add_edge(x, y)
        else:
            graph.add_edge(y, x)
    return graph


def compatible_order(poset: DoublePoset) -> tuple[str, ...]:
    """
    The lexicographically least topological order of the cover graph.

    Raises:
        PreconditionError: If the double poset is not locally special
        IntegrityError: If the cover graph has a directed cycle
    """
    if not poset.is_locally_special():
        raise PreconditionError(
            "A compatible order needs a locally special double poset",
            data={"elements": list(poset.elements)}
        )
    graph = cover_graph(poset)
    if not nx.is_directed_acyclic_graph(graph):
        raise IntegrityError(
            "Cover graph of a locally special double poset has a cycle",
            data={"cycle": [list(edge) for edge in nx.find_cycle(graph)]}
        )
    order = tuple(nx.lexicographical_topological_sort(graph))
    logger.debug("Compatible order: %s", " ".join(order))
    return order


def _positions(poset: DoublePoset, order: Sequence[str]) -> dict[str, int]:
    if sorted(order) != list(poset.elements):
        raise InvalidInputError(
            "Order must list every element exactly once",
            data={"order": list(order), "elements": list(poset.elements)}
        )
    return {x: i for i, x in enumerate(order)}


def has_increasing_extension(poset: DoublePoset, order: Sequence[str], subset: Iterable[str]) -> bool:
    """Whether ℓ restricted to ``subset`` is a ≤_1-linear extension of it."""
    position = _positions(poset, order)
    members = set(subset)
    return all(
        position[x] < position[y]
        for x, y in poset.rel1
        if x in members and y in members
    )


def is_compatible(
    poset: DoublePoset,
    order: Sequence[str],
    limits: Optional[LimitsConfig] = None,
) -> bool:
    """
    Check compatibility over every pair of ideals I ⊆ J.

    Raises:
        InvalidInputError: If ``order`` is not a permutation of the elements
        ResourceError: If the ground set exceeds ``limits.max_n``
    """
    _positions(poset, order)
    limits = get_limits(limits)
    if len(poset) > limits.max_n:
        raise ResourceError(
            f"Ground set of size {len(poset)} exceeds the bound {limits.max_n}",
            data={"size": len(poset), "max_n": limits.max_n}
        )
    ideals = poset.ideals()
    for lower in ideals:
        for upper in ideals:
            if not lower <= upper:
                continue
            interval = upper - lower
            if has_increasing_extension(poset, order, interval) == poset.has_inversion(interval):
                return False
    return True
