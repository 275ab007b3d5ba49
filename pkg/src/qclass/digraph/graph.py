"""
Directed graphs without loops or antiparallel edges, and their orientations.

An orientation of a digraph G chooses a direction for every edge of G. The
statistic des(O) counts the edges of G that O reverses; a proper coloring f
determines the orientation pointing every edge from its larger to its
smaller color, and then des(O) = asc(f).
"""
import logging
from dataclasses import dataclass
from itertools import product
from typing import Any, Iterable, Mapping, Optional

import networkx as nx
from networkx.algorithms import isomorphism

from qclass.combinat.set_compositions import SetComposition
from qclass.core.config import LimitsConfig
from qclass.core.config_parser import get_limits
from qclass.core.errors import InvalidInputError, PreconditionError, ResourceError
from qclass.core.logging import log_with_metadata
from qclass.core.validation import validate_labels, validate_pairs
from qclass.dposet.poset import DoublePoset
from qclass.groups.group import PermGroup
from qclass.groups.permutation import Permutation


logger = logging.getLogger(__name__)

Edge = tuple[str, str]


@dataclass(frozen=True)
class Orientation:
    """A choice of direction for each edge of a digraph.

    Attributes:
        vertices: Sorted vertex labels
        arcs: The directed edges, sorted
    """
    vertices: tuple[str, ...]
    arcs: tuple[Edge, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, 'arcs', tuple(sorted(self.arcs)))

    @property
    def is_acyclic(self) -> bool:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.arcs)
        return nx.is_directed_acyclic_graph(graph)

    def act(self, g: Permutation) -> 'Orientation':
        return Orientation(self.vertices, tuple((g(u), g(v)) for u, v in self.arcs))

    def is_fixed(self, g: Permutation) -> bool:
        return self.act(g) == self

    def __str__(self) -> str:
        return "{" + ", ".join(f"{u}->{v}" for u, v in self.arcs) + "}"


class Digraph:
    """A finite digraph with at most one edge between any two vertices.

    Attributes:
        vertices: Sorted vertex labels
        edges: Sorted directed edges
    """

    def __init__(self, vertices: Iterable[str], edges: Iterable[Edge] = ()):
        labels = validate_labels(list(vertices), 'vertices')
        self.vertices: tuple[str, ...] = tuple(sorted(labels))
        pairs = validate_pairs([list(e) for e in edges], labels, 'edges')
        seen: set[frozenset[str]] = set()
        for u, v in pairs:
            if u == v:
                raise InvalidInputError(
                    f"Loop at '{u}' is not allowed",
                    data={"field": "edges", "edge": [u, v]}
                )
            support = frozenset((u, v))
            if support in seen:
                raise InvalidInputError(
                    f"More than one edge between '{u}' and '{v}'",
                    data={"field": "edges", "edge": [u, v]}
                )
            seen.add(support)
        self.edges: tuple[Edge, ...] = tuple(sorted(pairs))
        self._edge_set = frozenset(self.edges)

    @classmethod
    def from_payload(cls, payload: Mapping[str, Any]) -> 'Digraph':
        return cls(payload.get('vertices', []), [tuple(e) for e in payload.get('edges', [])])

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"Digraph(vertices={list(self.vertices)}, edges={list(self.edges)})"

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return graph

    def has_edge(self, u: str, v: str) -> bool:
        return (u, v) in self._edge_set

    def is_independent(self, subset: Iterable[str]) -> bool:
        members = set(subset)
        return not any(u in members and v in members for u, v in self.edges)

    def reverse_edge(self, edge: Edge) -> 'Digraph':
        """The digraph with one edge turned around."""
        if edge not in self._edge_set:
            raise InvalidInputError(f"No edge {edge[0]}->{edge[1]}", data={"edge": list(edge)})
        return Digraph(self.vertices, [(v, u) if (u, v) == edge else (u, v) for u, v in self.edges])

    def is_automorphism(self, g: Permutation) -> bool:
        return g.domain == self.vertices and {(g(u), g(v)) for u, v in self.edges} == self._edge_set

    def require_symmetry(self, group: PermGroup) -> None:
        """
        Raises:
            InvalidInputError: If ``group`` does not act on G by automorphisms
        """
        if group.domain != self.vertices:
            raise InvalidInputError(
                "Group does not act on the vertex set",
                data={"domain": list(group.domain), "vertices": list(self.vertices)}
            )
        for g in group.generators:
            if not self.is_automorphism(g):
                raise InvalidInputError(
                    f"{g} is not an automorphism of the digraph",
                    data={"permutation": str(g)}
                )

    def automorphisms(self, limits: Optional[LimitsConfig] = None) -> PermGroup:
        """
        The automorphism group of G.

        Raises:
            ResourceError: If the vertex set exceeds ``limits.max_n``
        """
        limits = get_limits(limits)
        if len(self.vertices) > limits.max_n:
            raise ResourceError(
                f"Vertex set of size {len(self.vertices)} exceeds the bound {limits.max_n}",
                data={"size": len(self.vertices), "max_n": limits.max_n}
            )
        graph = self.to_networkx()
        matcher = isomorphism.DiGraphMatcher(graph, graph)
        found = [Permutation.from_mapping(mapping) for mapping in matcher.isomorphisms_iter()]
        if not found:
            found = [Permutation.identity(self.vertices)]
        group = PermGroup.from_elements(found, self.vertices, limits)
        log_with_metadata(
            logger, logging.DEBUG, "Computed digraph automorphisms",
            {"vertices": len(self.vertices), "edges": len(self.edges), "order": group.order}
        )
        return group

    def asc(self, coloring: Mapping[str, int]) -> int:
        """Edges (u, v) with f(u) < f(v)."""
        return sum(1 for u, v in self.edges if coloring[u] < coloring[v])

    def asc_composition(self, composition: SetComposition) -> int:
        """Edges (u, v) whose tail lies in an earlier block than the head."""
        index = composition.block_index()
        return sum(1 for u, v in self.edges if index[u] < index[v])

    def des(self, orientation: Orientation) -> int:
        """Edges of G that ``orientation`` reverses."""
        arcs = set(orientation.arcs)
        return sum(1 for u, v in self.edges if (v, u) in arcs)

    def orientation(self, arcs: Iterable[Edge]) -> Orientation:
        """
        Raises:
            InvalidInputError: If ``arcs`` does not orient exactly the edges of G
        """
        arcs = tuple(arcs)
        if sorted(frozenset(a) for a in arcs) != sorted(frozenset(e) for e in self.edges) \
                or len(set(arcs)) != len(arcs):
            raise InvalidInputError(
                "Arcs do not orient the edges of the digraph",
                data={"arcs": [list(a) for a in arcs]}
            )
        return Orientation(self.vertices, arcs)

    def acyclic_orientations(self, limits: Optional[LimitsConfig] = None) -> list[Orientation]:
        """All acyclic orientations, in order of the reversed-edge pattern."""
        limits = get_limits(limits)
        if len(self.vertices) > limits.max_n:
            raise ResourceError(
                f"Vertex set of size {len(self.vertices)} exceeds the bound {limits.max_n}",
                data={"size": len(self.vertices), "max_n": limits.max_n}
            )
        result = []
        for flips in product((False, True), repeat=len(self.edges)):
            arcs = tuple((v, u) if flip else (u, v) for (u, v), flip in zip(self.edges, flips))
            candidate = Orientation(self.vertices, arcs)
            if candidate.is_acyclic:
                result.append(candidate)
        logger.debug("Found %d acyclic orientations of %d edges", len(result), len(self.edges))
        return result


def orientation_poset(orientation: Orientation) -> DoublePoset:
    """
    P_O: x ≤_1 y when O has a directed path from y to x, and ≤_2 opposite.

    Raises:
        PreconditionError: If the orientation has a directed cycle
    """
    if not orientation.is_acyclic:
        raise PreconditionError(
            f"Orientation {orientation} has a directed cycle",
            data={"arcs": [list(a) for a in orientation.arcs]}
        )
    return DoublePoset(
        orientation.vertices,
        [(v, u) for u, v in orientation.arcs],
        list(orientation.arcs),
    )
