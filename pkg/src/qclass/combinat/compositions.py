"""
Integer compositions and the refinement order.

A composition of n is a sequence of positive integers summing to n. It is
identified with the subset S(α) of [n−1] of its proper partial sums. The
refinement order puts finer compositions above coarser ones, so β ≥ α
exactly when S(α) ⊆ S(β).
"""
from dataclasses import dataclass
from itertools import accumulate, combinations
from typing import Iterable, Iterator, Optional

from qclass.core.config import LimitsConfig
from qclass.core.config_parser import get_limits
from qclass.core.errors import InvalidInputError, ResourceError


@dataclass(frozen=True, order=True)
class IntComposition:
    """An integer composition, ordered lexicographically on its parts.

    The empty composition is allowed and is the only composition of 0.

    Attributes:
        parts: Positive integer parts

    Examples:
        >>> IntComposition((1, 2, 1)).subset()
        frozenset({1, 3})
    """
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        for part in parts:
            if isinstance(part, bool) or not isinstance(part, int) or part < 1:
                raise InvalidInputError(
                    f"Composition parts must be positive integers, got {list(parts)}",
                    data={"parts": [repr(p) for p in parts]}
                )
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def of(cls, *parts: int) -> 'IntComposition':
        """Shorthand constructor: ``IntComposition.of(2, 1)``."""
        return cls(tuple(parts))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def subset(self) -> frozenset[int]:
        """The set S(α) of proper partial sums."""
        return composition_to_subset(self)

    def reversed(self) -> 'IntComposition':
        return IntComposition(self.parts[::-1])

    def coarsenings(self) -> list['IntComposition']:
        """All compositions α' ≤ α, i.e. obtained by merging consecutive parts."""
        s = sorted(self.subset())
        n = self.weight
        return sorted(
            subset_to_composition(chosen, n)
            for r in range(len(s) + 1)
            for chosen in combinations(s, r)
        )

    def refinements(self) -> list['IntComposition']:
        """All compositions β ≥ α, i.e. obtained by splitting parts."""
        n = self.weight
        own = self.subset()
        free = [i for i in range(1, n) if i not in own]
        return sorted(
            subset_to_composition(own | set(extra), n)
            for r in range(len(free) + 1)
            for extra in combinations(free, r)
        )

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def composition_to_subset(alpha: IntComposition) -> frozenset[int]:
    """Return S(α) = {α_1, α_1+α_2, …, α_1+⋯+α_{ℓ−1}}."""
    return frozenset(list(accumulate(alpha.parts))[:-1])


def subset_to_composition(subset: Iterable[int], n: int) -> IntComposition:
    """
    Return the composition α of n with S(α) = subset.

    Args:
        subset: Subset of {1, …, n−1}
        n: Weight of the composition

    Returns:
        The composition (s_1, s_2 − s_1, …, n − s_k)

    Raises:
        InvalidInputError: If n is negative or an element lies outside [n−1]
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise InvalidInputError(f"Weight must be a nonnegative integer, got {n!r}")

    points = sorted(set(subset))
    for s in points:
        if isinstance(s, bool) or not isinstance(s, int) or not 1 <= s <= n - 1:
            raise InvalidInputError(
                f"Element {s!r} is outside [1, {n - 1}]",
                data={"element": repr(s), "n": n}
            )

    if n == 0:
        return IntComposition(())

    cuts = [0] + points + [n]
    return IntComposition(tuple(b - a for a, b in zip(cuts, cuts[1:])))


def refines(beta: IntComposition, alpha: IntComposition) -> bool:
    """
    Decide whether β refines α (β ≥ α, finer is larger).

    Raises:
        InvalidInputError: If the weights differ
    """
    if beta.weight != alpha.weight:
        raise InvalidInputError(
            f"Cannot compare compositions of weights {beta.weight} and {alpha.weight}",
            data={"beta": list(beta.parts), "alpha": list(alpha.parts)}
        )
    return alpha.subset() <= beta.subset()


def compositions_of(n: int, limits: Optional[LimitsConfig] = None) -> list[IntComposition]:
    """
    All compositions of n, sorted.

    Raises:
        ResourceError: If n exceeds the configured ``max_degree``
    """
    limits = get_limits(limits)
    if n > limits.max_degree:
        raise ResourceError(
            f"Refusing to list the 2^{n - 1} compositions of {n}",
            data={"n": n, "max_degree": limits.max_degree}
        )
    if n == 0:
        return [IntComposition(())]
    return IntComposition((n,)).refinements()
