"""
Brute-force orbit counting, used to cross-check the orbital invariants.

Orbits come from union-find over the generators. A point is coeven when its
stabilizer contains only even permutations.
"""
from itertools import product
from typing import Callable, Hashable, Iterable, Sequence, TypeVar

from qclass.digraph.graph import Digraph
from qclass.dposet.enumeration import is_d_partition
from qclass.dposet.poset import DoublePoset
from qclass.groups.group import PermGroup
from qclass.groups.orbits import orbits
from qclass.groups.permutation import Permutation


T = TypeVar('T', bound=Hashable)

Action = Callable[[Permutation, T], T]
Coloring = tuple[int, ...]


def orbit_count_oracle(group: PermGroup, points: Iterable[T], act: Action) -> int:
    """|X / 𝔊| by union-find."""
    return len(orbits(group, points, act))


def is_coeven(group: PermGroup, point: T, act: Action) -> bool:
    return all(g.sign == 1 for g in group.elements if act(g, point) == point)


def coeven_orbit_oracle(group: PermGroup, points: Iterable[T], act: Action) -> int:
    """|X⁺ / 𝔊|, the orbits of points whose stabilizer lies in the alternating group."""
    coeven = [x for x in points if is_coeven(group, x, act)]
    return len(orbits(group, coeven, act)) if coeven else 0


def map_action(labels: Sequence[str]) -> Action:
    """(g·f)(x) = f(g⁻¹x) on maps stored as value tuples in ``labels`` order."""
    index = {x: i for i, x in enumerate(labels)}

    def act(g: Permutation, f: Coloring) -> Coloring:
        inverse = g.inverse()
        return tuple(f[index[inverse(x)]] for x in labels)

    return act


def _all_maps(count: int, n: int) -> list[Coloring]:
    return list(product(range(1, n + 1), repeat=count))


def d_partitions(poset: DoublePoset, n: int) -> list[Coloring]:
    """All D-partitions N → [n] as value tuples."""
    labels = poset.elements
    return [f for f in _all_maps(len(labels), n) if is_d_partition(poset, dict(zip(labels, f)))]


def proper_colorings(graph: Digraph, n: int) -> list[Coloring]:
    labels = graph.vertices
    index = {x: i for i, x in enumerate(labels)}
    return [
        f for f in _all_maps(len(labels), n)
        if all(f[index[u]] != f[index[v]] for u, v in graph.edges)
    ]


def coloring_asc(graph: Digraph, f: Coloring) -> int:
    return graph.asc(dict(zip(graph.vertices, f)))


def group_on_itself(group: PermGroup) -> tuple[list[Permutation], Action]:
    """Left multiplication, a transitive action."""
    return list(group.elements), lambda g, h: g * h

