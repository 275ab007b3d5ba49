"""
Orbits of group actions by union-find.
"""
from typing import Callable, Hashable, Iterable, TypeVar

from qclass.groups.group import PermGroup
from qclass.groups.permutation import Permutation


T = TypeVar('T', bound=Hashable)
Action = Callable[[Permutation, T], T]


class UnionFind:
    """Disjoint sets with path compression and union by rank."""

    def __init__(self, items: Iterable[T]):
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in self.parent}

    def find(self, x: T) -> T:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: T, y: T) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x

    def groups(self) -> list[list[T]]:
        """The disjoint sets, each in insertion order, ordered by first member."""
        by_root: dict[T, list[T]] = {}
        for x in self.parent:
            by_root.setdefault(self.find(x), []).append(x)
        return list(by_root.values())


def orbits(group: PermGroup, points: Iterable[T], act: Action) -> list[list[T]]:
    """
    Orbits of ``group`` on ``points``.

    Only the generators are applied; ``act(g, x)`` must land in ``points``.

    Raises:
        KeyError: If the action leaves the point set
    """
    space = list(points)
    uf = UnionFind(space)
    for g in group.generators:
        for x in space:
            uf.union(x, act(g, x))
    return uf.groups()
