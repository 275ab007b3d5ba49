"""
Finite permutation groups given by generators.

The element list is the closure of the generators, sorted so that the
identity comes first and equal groups list their elements identically.
Conjugacy classes are orbits of conjugation by the generators; each class is
represented by its least element and the identity class has index 0.
"""
import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from math import lcm
from typing import Callable, Iterable, Optional, Sequence

from qclass.core.config import LimitsConfig
from qclass.core.config_parser import get_limits
from qclass.core.errors import InvalidInputError, ResourceError
from qclass.core.logging import log_with_metadata
from qclass.groups.permutation import Permutation


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConjugacyClass:
    """One conjugacy class.

    Attributes:
        index: Position in ``PermGroup.classes``
        representative: Least element of the class
        elements: Class members in group order
    """
    index: int
    representative: Permutation
    elements: tuple[Permutation, ...]

    @property
    def size(self) -> int:
        return len(self.elements)


class PermGroup:
    """A finite group of permutations of a labelled ground set.

    Use ``generate`` (or ``PermGroup.from_elements``) to build one; the
    constructor trusts that ``elements`` is closed and sorted.

    Attributes:
        domain: Sorted ground-set labels
        generators: Generators as given
        elements: All elements, identity first
    """

    def __init__(
        self,
        domain: tuple[str, ...],
        generators: tuple[Permutation, ...],
        elements: tuple[Permutation, ...],
    ):
        self.domain = domain
        self.generators = generators
        self.elements = elements
        self._index = {g: i for i, g in enumerate(elements)}
        self._key = (domain, frozenset(elements))

    @classmethod
    def from_elements(
        cls,
        elements: Iterable[Permutation],
        domain: Optional[Iterable[str]] = None,
        limits: Optional[LimitsConfig] = None,
    ) -> 'PermGroup':
        """
        Build the group generated by ``elements``, choosing few generators.

        Generators are picked greedily in element order: an element becomes a
        generator when it is not yet in the group generated so far.
        """
        pool = sorted(set(elements), key=lambda g: g.array)
        labels = tuple(sorted(domain)) if domain is not None else (pool[0].domain if pool else ())
        group = generate([], labels, limits)
        chosen: list[Permutation] = []
        for g in pool:
            if g not in group:
                chosen.append(g)
                group = generate(chosen, labels, limits)
        return group

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g: object) -> bool:
        return g in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self is other or self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators) or "()"
        return f"PermGroup(<{gens}>, order={self.order})"

    @property
    def identity(self) -> Permutation:
        return self.elements[0]

    def index(self, g: Permutation) -> int:
        return self._index[g]

    @cached_property
    def classes(self) -> tuple[ConjugacyClass, ...]:
        """Conjugacy classes, ordered by representative; class 0 is {e}."""
        assigned: dict[Permutation, int] = {}
        members: list[list[Permutation]] = []
        conjugators = [(s, s.inverse()) for s in self.generators]
        for g in self.elements:
            if g in assigned:
                continue
            number = len(members)
            orbit = [g]
            assigned[g] = number
            queue = deque([g])
            while queue:
                h = queue.popleft()
                for s, s_inv in conjugators:
                    k = s * h * s_inv
                    if k not in assigned:
                        assigned[k] = number
                        orbit.append(k)
                        queue.append(k)
            members.append(sorted(orbit, key=self.index))
        return tuple(
            ConjugacyClass(i, elems[0], tuple(elems))
            for i, elems in enumerate(members)
        )

    @cached_property
    def _class_of(self) -> dict[Permutation, int]:
        return {g: c.index for c in self.classes for g in c.elements}

    def class_index(self, g: Permutation) -> int:
        """
        Index of the conjugacy class containing g.

        Raises:
            InvalidInputError: If g is not in the group
        """
        try:
            return self._class_of[g]
        except KeyError:
            raise InvalidInputError(
                f"Permutation {g} is not an element of {self!r}",
                data={"permutation": str(g)}
            )

    @property
    def class_sizes(self) -> tuple[int, ...]:
        return tuple(c.size for c in self.classes)

    @property
    def representatives(self) -> tuple[Permutation, ...]:
        return tuple(c.representative for c in self.classes)

    @cached_property
    def exponent(self) -> int:
        """Least common multiple of the element orders."""
        return lcm(1, *(c.representative.order for c in self.classes))

    def power_map(self, k: int) -> tuple[int, ...]:
        """For each class C, the class of g^k for g in C."""
        return tuple(self.class_index(c.representative ** k) for c in self.classes)

    @cached_property
    def inverse_classes(self) -> tuple[int, ...]:
        return self.power_map(-1)

    def is_subgroup_of(self, other: 'PermGroup') -> bool:
        return self.domain == other.domain and all(g in other for g in self.elements)

    def stabilizer(
        self,
        predicate: Callable[[Permutation], bool],
        limits: Optional[LimitsConfig] = None,
    ) -> 'PermGroup':
        """
        The subgroup of elements satisfying ``predicate``.

        The predicate must describe a subgroup, such as "fixes this point".
        """
        return PermGroup.from_elements(
            (g for g in self.elements if predicate(g)), self.domain, limits
        )


def generate(
    generators: Sequence[Permutation],
    domain: Optional[Iterable[str]] = None,
    limits: Optional[LimitsConfig] = None,
) -> PermGroup:
    """
    Generate the permutation group spanned by ``generators``.

    Args:
        generators: Permutations of a common ground set
        domain: Ground set; required when there are no generators
        limits: Size bounds (default: active configuration)

    Returns:
        The closed group, elements sorted with the identity first

    Raises:
        InvalidInputError: If the generators act on different ground sets
        ResourceError: If the closure exceeds ``limits.max_group_order``
    """
    limits = get_limits(limits)
    gens = tuple(generators)

    if domain is not None:
        labels = tuple(sorted(domain))
    elif gens:
        labels = gens[0].domain
    else:
        raise InvalidInputError("A group without generators needs an explicit domain")

    for g in gens:
        if g.domain != labels:
            raise InvalidInputError(
                f"Generator {g} does not act on the ground set {list(labels)}",
                data={"generator": str(g), "domain": list(labels)}
            )

    identity = Permutation.identity(labels)
    seen = {identity}
    queue = deque([identity])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = s * g
            if h not in seen:
                seen.add(h)
                if len(seen) > limits.max_group_order:
                    raise ResourceError(
                        f"Group order exceeds the bound {limits.max_group_order}",
                        data={"max_group_order": limits.max_group_order}
                    )
                queue.append(h)

    elements = tuple(sorted(seen, key=lambda g: g.array))
    log_with_metadata(
        logger, logging.DEBUG, "Generated permutation group",
        {"generators": [str(g) for g in gens], "order": len(elements)}
    )
    return PermGroup(labels, gens, elements)


def parse_group(
    generators: Iterable[str],
    domain: Iterable[str],
    limits: Optional[LimitsConfig] = None,
) -> PermGroup:
    """Generate a group from cycle-notation strings over ``domain``."""
    labels = tuple(sorted(domain))
    return generate([Permutation.parse(text, labels) for text in generators], labels, limits)


def symmetric_group(domain: Iterable[str], limits: Optional[LimitsConfig] = None) -> PermGroup:
    """The full symmetric group, generated by a transposition and a long cycle."""
    labels = tuple(sorted(domain))
    gens = []
    if len(labels) >= 2:
        gens.append(Permutation.from_mapping({**{x: x for x in labels}, labels[0]: labels[1], labels[1]: labels[0]}))
    if len(labels) >= 3:
        gens.append(Permutation.from_mapping(dict(zip(labels, labels[1:] + labels[:1]))))
    return generate(gens, labels, limits)
