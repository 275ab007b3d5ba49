"""
Double posets: a ground set carrying two partial orders.

Relations are given as arbitrary pair lists (covers or full relations),
transitively closed at construction, and stored as sets of strict pairs.
Labels are kept in sorted order for deterministic enumeration.
"""
import logging
from itertools import combinations
from typing import Any, Iterable, Mapping, Optional

import networkx as nx
from networkx.algorithms import isomorphism

from qclass.core.config import LimitsConfig
from qclass.core.config_parser import get_limits
from qclass.core.errors import IntegrityError, InvalidInputError, ResourceError
from qclass.core.logging import log_with_metadata
from qclass.core.validation import validate_labels, validate_pairs, validate_weights
from qclass.groups.group import PermGroup
from qclass.groups.permutation import Permutation


logger = logging.getLogger(__name__)

Pair = tuple[str, str]


def strict_closure(labels: Iterable[str], pairs: Iterable[Pair], what: str = "relation") -> frozenset[Pair]:
    """
    Transitive closure of a relation, without the reflexive pairs.

    Raises:
        InvalidInputError: If the relation has a cycle (is not antisymmetric)
    """
    graph = nx.DiGraph()
    graph.add_nodes_from(labels)
    graph.add_edges_from((x, y) for x, y in pairs if x != y)
    if not nx.is_directed_acyclic_graph(graph):
        cycle = nx.find_cycle(graph)
        raise InvalidInputError(
            f"'{what}' is not a partial order: it contains a cycle",
            data={"field": what, "cycle": [list(edge) for edge in cycle]}
        )
    return frozenset(nx.transitive_closure_dag(graph).edges())


class DoublePoset:
    """A triple (N, ≤_1, ≤_2) of a finite set and two partial orders, with weights.

    Attributes:
        elements: Sorted labels of N
        weights: Positive integer weight of every label (default 1)
    """

    def __init__(
        self,
        elements: Iterable[str],
        rel1: Iterable[Pair] = (),
        rel2: Iterable[Pair] = (),
        weights: Optional[Mapping[str, int]] = None,
    ):
        labels = validate_labels(list(elements), 'elements')
        self.elements: tuple[str, ...] = tuple(sorted(labels))
        pairs1 = validate_pairs([list(p) for p in rel1], labels, 'rel1')
        pairs2 = validate_pairs([list(p) for p in rel2], labels, 'rel2')
        self.weights: dict[str, int] = validate_weights(
            dict(weights) if weights is not None else None, self.elements
        )
        self._lt1 = strict_closure(self.elements, pairs1, 'rel1')
        self._lt2 = strict_closure(self.elements, pairs2, 'rel2')

        reduction = nx.transitive_reduction(self._graph(self._lt1))
        self._covers1 = frozenset(reduction.edges())
        self._below1: dict[str, frozenset[str]] = {
            y: frozenset(x for x, z in self._lt1 if z == y) for y in self.elements
        }

    @classmethod
    def from_payload(cls, payload: Mapping[str, Any]) -> 'DoublePoset':
        """Build from an instance-file object with elements, rel1, rel2, weights."""
        return cls(
            payload.get('elements', []),
            [tuple(p) for p in payload.get('rel1', [])],
            [tuple(p) for p in payload.get('rel2', [])],
            payload.get('weights'),
        )

    def _graph(self, pairs: Iterable[Pair]) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.elements)
        graph.add_edges_from(pairs)
        return graph

    def _check(self, *labels: str) -> None:
        for x in labels:
            if x not in self.weights:
                raise InvalidInputError(
                    f"Unknown element '{x}'",
                    data={"label": x, "elements": list(self.elements)}
                )

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def total_weight(self) -> int:
        return sum(self.weights.values())

    @property
    def has_unit_weights(self) -> bool:
        return all(w == 1 for w in self.weights.values())

    @property
    def rel1(self) -> frozenset[Pair]:
        """Strict pairs x <_1 y."""
        return self._lt1

    @property
    def rel2(self) -> frozenset[Pair]:
        """Strict pairs x <_2 y."""
        return self._lt2

    @property
    def covers1(self) -> frozenset[Pair]:
        """Cover pairs x ≺_1 y."""
        return self._covers1

    def below1(self, y: str) -> frozenset[str]:
        """Elements strictly below y in ≤_1."""
        return self._below1[y]

    def lt1(self, x: str, y: str) -> bool:
        return (x, y) in self._lt1

    def lt2(self, x: str, y: str) -> bool:
        return (x, y) in self._lt2

    def leq1(self, x: str, y: str) -> bool:
        return x == y or (x, y) in self._lt1

    def leq2(self, x: str, y: str) -> bool:
        return x == y or (x, y) in self._lt2

    def is_inversion(self, x: str, y: str) -> bool:
        """x <_1 y and y <_2 x."""
        self._check(x, y)
        return self.lt1(x, y) and self.lt2(y, x)

    def is_descent_pair(self, x: str, y: str) -> bool:
        """An inversion pair whose elements form a ≤_1 cover."""
        return self.is_inversion(x, y) and (x, y) in self._covers1

    def inversions(self) -> list[Pair]:
        return sorted((x, y) for x, y in self._lt1 if self.lt2(y, x))

    def has_inversion(self, subset: Iterable[str]) -> bool:
        return any(
            self.is_inversion(x, y) or self.is_inversion(y, x)
            for x, y in combinations(sorted(subset), 2)
        )

    def has_descent_pair(self, subset: Iterable[str]) -> bool:
        members = set(subset)
        return any(
            x in members and y in members and self.lt2(y, x)
            for x, y in self._covers1
        )

    def is_locally_special(self) -> bool:
        """Every ≤_1 cover pair is ≤_2-comparable."""
        return all(self.leq2(x, y) or self.leq2(y, x) for x, y in self._covers1)

    def is_ideal(self, subset: Iterable[str]) -> bool:
        """Whether ``subset`` is a ≤_1-order ideal."""
        members = set(subset)
        return all(self._below1[y] <= members for y in members)

    def ideals(self) -> list[frozenset[str]]:
        """All ≤_1-order ideals, by size and then lexicographically."""
        found: set[frozenset[str]] = {frozenset()}
        frontier = [frozenset()]
        while frontier:
            next_frontier = []
            for ideal in frontier:
                for y in self.elements:
                    if y not in ideal and self._below1[y] <= ideal:
                        bigger = ideal | {y}
                        if bigger not in found:
                            found.add(bigger)
                            next_frontier.append(bigger)
            frontier = next_frontier
        return sorted(found, key=lambda s: (len(s), sorted(s)))

    def dual(self) -> 'DoublePoset':
        """D*: ≤_1 reversed, ≤_2 unchanged."""
        return DoublePoset(
            self.elements, [(y, x) for x, y in self._lt1], self._lt2, self.weights
        )

    def opposite(self) -> 'DoublePoset':
        """Both orders reversed."""
        return DoublePoset(
            self.elements,
            [(y, x) for x, y in self._lt1],
            [(y, x) for x, y in self._lt2],
            self.weights,
        )

    def is_automorphism(self, g: Permutation) -> bool:
        if g.domain != self.elements:
            return False
        return (
            all(self.weights[g(x)] == w for x, w in self.weights.items())
            and {(g(x), g(y)) for x, y in self._lt1} == self._lt1
            and {(g(x), g(y)) for x, y in self._lt2} == self._lt2
        )

    def require_symmetry(self, group: PermGroup) -> None:
        """
        Raises:
            InvalidInputError: If ``group`` is not a subgroup of Aut(D)
        """
        for g in group.generators:
            if not self.is_automorphism(g):
                raise InvalidInputError(
                    f"{g} is not an automorphism of the double poset",
                    data={"permutation": str(g)}
                )

    def automorphisms(self, limits: Optional[LimitsConfig] = None) -> PermGroup:
        """
        The automorphism group, respecting both orders and the weights.

        Raises:
            ResourceError: If the ground set exceeds ``limits.max_n``
        """
        limits = get_limits(limits)
        if len(self.elements) > limits.max_n:
            raise ResourceError(
                f"Ground set of size {len(self.elements)} exceeds the bound {limits.max_n}",
                data={"size": len(self.elements), "max_n": limits.max_n}
            )

        graph = nx.DiGraph()
        for x in self.elements:
            graph.add_node(x, weight=self.weights[x])
        for x, y in self._lt1 | self._lt2:
            graph.add_edge(x, y, rel=((x, y) in self._lt1, (x, y) in self._lt2))
        matcher = isomorphism.DiGraphMatcher(
            graph,
            graph,
            node_match=isomorphism.categorical_node_match('weight', 1),
            edge_match=isomorphism.categorical_edge_match('rel', None),
        )
        found = [Permutation.from_mapping(mapping) for mapping in matcher.isomorphisms_iter()]
        if not found:
            found = [Permutation.identity(self.elements)]
        group = PermGroup.from_elements(found, self.elements, limits)
        log_with_metadata(
            logger, logging.DEBUG, "Computed double-poset automorphisms",
            {"size": len(self.elements), "order": group.order}
        )
        return group

    def quotient(self, g: Permutation) -> 'DoublePoset':
        """
        D/g: the double poset on the cycles of g with summed weights.

        C ≤_i C' when some x ∈ C and y ∈ C' satisfy x ≤_i y. A one-element
        cycle keeps its label; a longer cycle is labelled "{x;y;...}".

        Raises:
            InvalidInputError: If g does not permute the elements
            IntegrityError: If an induced relation is not antisymmetric
        """
        if g.domain != self.elements:
            raise InvalidInputError(
                "Permutation does not act on the double poset",
                data={"permutation": str(g), "elements": list(self.elements)}
            )
        cycles = g.cycles(include_fixed=True)
        label = {
            x: (c[0] if len(c) == 1 else "{" + ";".join(sorted(c)) + "}")
            for c in cycles for x in c
        }
        weights = {label[c[0]]: sum(self.weights[x] for x in c) for c in cycles}
        induced = []
        for what, pairs in (('rel1', self._lt1), ('rel2', self._lt2)):
            edges = {(label[x], label[y]) for x, y in pairs}
            if any(a == b for a, b in edges):
                raise IntegrityError(
                    f"Induced '{what}' relates a cycle of {g} to itself",
                    data={"permutation": str(g), "relation": what}
                )
            graph = nx.DiGraph(list(edges))
            if not nx.is_directed_acyclic_graph(graph):
                raise IntegrityError(
                    f"Induced '{what}' on the cycles of {g} is not antisymmetric",
                    data={"permutation": str(g), "relation": what}
                )
            induced.append(sorted(edges))
        return DoublePoset(sorted(weights), induced[0], induced[1], weights)

    def to_payload(self) -> dict[str, Any]:
        payload: dict[str, Any] = {
            'elements': list(self.elements),
            'rel1': [list(p) for p in sorted(self._lt1)],
            'rel2': [list(p) for p in sorted(self._lt2)],
        }
        if not self.has_unit_weights:
            payload['weights'] = dict(self.weights)
        return payload

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DoublePoset):
            return NotImplemented
        return (
            self.elements == other.elements
            and self._lt1 == other._lt1
            and self._lt2 == other._lt2
            and self.weights == other.weights
        )

    def __hash__(self) -> int:
        return hash((self.elements, self._lt1, self._lt2, tuple(sorted(self.weights.items()))))

    def __repr__(self) -> str:
        return (
            f"DoublePoset(elements={list(self.elements)}, rel1={sorted(self._lt1)}, "
            f"rel2={sorted(self._lt2)})"
        )
