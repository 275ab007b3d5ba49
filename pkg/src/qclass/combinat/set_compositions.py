"""
Set compositions (ordered set partitions) of a finite labelled ground set.

Enumeration is depth first over the choice of the next block, with an
optional ``accept`` callback that prunes a branch as soon as a block is
rejected. The double-poset and digraph kernels plug their block conditions
into that callback.
"""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import TYPE_CHECKING, Callable, Iterable, Iterator, Optional

from qclass.combinat.compositions import IntComposition, refines
from qclass.core.config import LimitsConfig
from qclass.core.config_parser import get_limits
from qclass.core.errors import InvalidInputError, ResourceError

if TYPE_CHECKING:
    from qclass.groups.permutation import Permutation


logger = logging.getLogger(__name__)

Block = tuple[str, ...]
BlockFilter = Callable[[Block, frozenset[str]], bool]


@dataclass(frozen=True)
class SetComposition:
    """An ordered sequence of disjoint nonempty blocks.

    Blocks are stored as sorted label tuples, so two set compositions are
    equal exactly when they have the same blocks in the same order.

    Attributes:
        blocks: The blocks C_1, ..., C_k
    """
    blocks: tuple[Block, ...]

    def __post_init__(self) -> None:
        blocks = tuple(tuple(sorted(block)) for block in self.blocks)
        seen: set[str] = set()
        for block in blocks:
            if not block:
                raise InvalidInputError("Set composition blocks must be nonempty")
            for label in block:
                if label in seen:
                    raise InvalidInputError(
                        f"Label '{label}' occurs in two blocks",
                        data={"label": label}
                    )
                seen.add(label)
        object.__setattr__(self, 'blocks', blocks)

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[str]]) -> 'SetComposition':
        return cls(tuple(tuple(block) for block in blocks))

    @classmethod
    def parse(cls, text: str) -> 'SetComposition':
        """Parse ``"a|c|bd"`` (single-character labels) or ``"a|c|b,d"``."""
        if not text.strip():
            return cls(())
        blocks = []
        for chunk in text.split('|'):
            chunk = chunk.strip()
            blocks.append(tuple(chunk.split(',')) if ',' in chunk else tuple(chunk))
        return cls(tuple(blocks))

    @property
    def ground_set(self) -> frozenset[str]:
        return frozenset(label for block in self.blocks for label in block)

    @property
    def composition(self) -> IntComposition:
        """The type α(C) = (|C_1|, ..., |C_k|)."""
        return IntComposition(tuple(len(block) for block in self.blocks))

    def weighted_composition(self, weights: dict[str, int]) -> IntComposition:
        """The type obtained by summing ``weights`` over each block."""
        return IntComposition(tuple(sum(weights[x] for x in block) for block in self.blocks))

    def block_index(self) -> dict[str, int]:
        """Map every label to the position of its block."""
        return {label: i for i, block in enumerate(self.blocks) for label in block}

    def __len__(self) -> int:
        return len(self.blocks)

    def __str__(self) -> str:
        joiner = '' if all(len(x) == 1 for x in self.ground_set) else ','
        return '|'.join(joiner.join(block) for block in self.blocks)


def coarsen_to_type(composition: SetComposition, alpha: IntComposition) -> SetComposition:
    """
    Merge consecutive blocks of ``composition`` into the set composition of type α.

    Args:
        composition: Set composition C
        alpha: Target type, a coarsening of α(C)

    Returns:
        The unique set composition of type α lying below C

    Raises:
        InvalidInputError: If α is not a coarsening of α(C)
    """
    own = composition.composition
    if own.weight != alpha.weight or not refines(own, alpha):
        raise InvalidInputError(
            f"{alpha} is not a coarsening of the type {own}",
            data={"alpha": list(alpha.parts), "type": list(own.parts)}
        )

    merged = []
    position = 0
    for part in alpha.parts:
        block: list[str] = []
        while len(block) < part:
            block.extend(composition.blocks[position])
            position += 1
        merged.append(tuple(block))
    return SetComposition(tuple(merged))


def _candidate_blocks(remaining: tuple[str, ...], largest: int) -> list[Block]:
    candidates = [
        block
        for size in range(1, largest + 1)
        for block in combinations(remaining, size)
    ]
    candidates.sort()
    return candidates


def enumerate_set_compositions(
    ground_set: Iterable[str],
    accept: Optional[BlockFilter] = None,
    limits: Optional[LimitsConfig] = None,
) -> Iterator[SetComposition]:
    """
    Yield every set composition of ``ground_set`` exactly once.

    Compositions come out by number of blocks, then lexicographically on
    the block sequence. When ``accept`` is given, a block is only placed if
    ``accept(block, used)`` is true, where ``used`` is the union of the
    blocks already placed; rejected branches are not explored further.

    Args:
        ground_set: Labels to compose
        accept: Optional block filter
        limits: Size bounds (default: active configuration)

    Yields:
        SetComposition objects

    Raises:
        ResourceError: If the ground set exceeds ``limits.max_n``
    """
    labels = tuple(sorted(set(ground_set)))
    limits = get_limits(limits)
    if len(labels) > limits.max_n:
        raise ResourceError(
            f"Ground set of size {len(labels)} exceeds the bound {limits.max_n}",
            data={"size": len(labels), "max_n": limits.max_n}
        )

    if not labels:
        yield SetComposition(())
        return

    def extend(
        prefix: list[Block],
        used: frozenset[str],
        remaining: tuple[str, ...],
        length: int,
    ) -> Iterator[SetComposition]:
        blocks_left = length - len(prefix)
        if blocks_left == 1:
            if accept is None or accept(remaining, used):
                yield SetComposition(tuple(prefix) + (remaining,))
            return
        # later blocks need at least one label each
        largest = len(remaining) - (blocks_left - 1)
        for block in _candidate_blocks(remaining, largest):
            if accept is not None and not accept(block, used):
                continue
            chosen = set(block)
            prefix.append(block)
            yield from extend(
                prefix,
                used | chosen,
                tuple(x for x in remaining if x not in chosen),
                length,
            )
            prefix.pop()

    emitted = 0
    for length in range(1, len(labels) + 1):
        for composition in extend([], frozenset(), labels, length):
            emitted += 1
            yield composition
    logger.debug("Enumerated %d set compositions of %d labels", emitted, len(labels))


def act(g: 'Permutation', composition: SetComposition) -> SetComposition:
    """
    Apply a permutation blockwise: gC = g(C_1)|g(C_2)|...|g(C_k).

    Raises:
        InvalidInputError: If g does not permute the ground set of C
    """
    if frozenset(g.domain) != composition.ground_set:
        raise InvalidInputError(
            "Permutation and set composition have different ground sets",
            data={"permutation": list(g.domain), "ground_set": sorted(composition.ground_set)}
        )
    return SetComposition(tuple(tuple(g(x) for x in block) for block in composition.blocks))


def is_fixed(g: 'Permutation', composition: SetComposition) -> bool:
    """Whether every block of C is setwise fixed by g."""
    return all(
        frozenset(g(x) for x in block) == frozenset(block)
        for block in composition.blocks
    )
